#include "lrc/io.hpp"

#include <fstream>
#include <sstream>

#include "lrc/error.hpp"

namespace lrc::io {

namespace {

Json element_codes(std::span<const FieldElement> xs) {
    Json out = Json::array();
    for (auto x : xs) out.push_back(x.code);
    return out;
}

template <typename T>
T get(const Json& j, const char* key) {
    if (!j.contains(key)) fail(ErrorCode::InvalidConfig, std::string("code file lacks '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& ex) {
        fail(ErrorCode::InvalidConfig, std::string("bad '") + key + "': " + ex.what());
    }
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::string backend_name(BackendKind kind) { return kind == BackendKind::Rational ? "rational" : "hermitian"; }

BackendKind parse_backend(const std::string& name) {
    if (name == "rational") return BackendKind::Rational;
    if (name == "hermitian") return BackendKind::Hermitian;
    fail(ErrorCode::InvalidConfig, "unknown backend '" + name + "'");
}

Construction parse_construction(const std::string& name) {
    if (name == "simple-poles" || name == "sec3") return Construction::SimplePoles;
    if (name == "high-degree" || name == "higher-degree" || name == "sec4") return Construction::HigherDegree;
    fail(ErrorCode::InvalidConfig, "unknown construction '" + name + "'");
}

Json code_to_json(const LrcCode& code) {
    const auto& F = code.field;
    const auto& P = code.params;
    Json j;
    j["format"] = "lrc-code/1";
    j["field"] = {{"p", F.p()}, {"ext_deg", F.ext_deg()}, {"modulus", F.modulus()}};
    j["params"] = {{"q", P.q},
                   {"r", P.r},
                   {"m", P.m},
                   {"t", P.t},
                   {"e", P.e},
                   {"genus", P.genus},
                   {"backend", backend_name(P.backend)},
                   {"construction", construction_name(P.construction)},
                   {"b", P.b},
                   {"alphas", element_codes(P.alphas)}};
    j["n"] = code.n();
    j["groups"] = code.groups;
    j["pivot_rows"] = code.pivot_rows;
    j["group_places"] = code.group_places;
    j["provenance"] = code.provenance;
    j["t_independent"] = code.t_independent ? Json(*code.t_independent) : Json(nullptr);
    Json rows = Json::array();
    for (std::size_t r = 0; r < code.H.rows(); ++r) rows.push_back(element_codes(code.H.row(r)));
    j["H"] = {{"rows", code.H.rows()}, {"cols", code.H.cols()}, {"entries", rows}};
    return j;
}

LrcCode code_from_json(const Json& j) {
    if (!j.is_object()) fail(ErrorCode::InvalidConfig, "code file is not a JSON object");
    const Json field = get<Json>(j, "field");
    const auto p = get<std::uint32_t>(field, "p");
    const auto d = get<unsigned>(field, "ext_deg");
    std::optional<std::vector<std::uint32_t>> modulus;
    if (d > 1) modulus = get<std::vector<std::uint32_t>>(field, "modulus");
    const Field F = Field::make(p, d, modulus);

    const Json h = get<Json>(j, "H");
    const auto rows = get<std::size_t>(h, "rows");
    const auto cols = get<std::size_t>(h, "cols");
    const auto entries = get<std::vector<std::vector<std::uint32_t>>>(h, "entries");
    if (entries.size() != rows) fail(ErrorCode::InvalidConfig, "H row count does not match 'rows'");
    Matrix H(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (entries[r].size() != cols) fail(ErrorCode::InvalidConfig, "H row " + std::to_string(r) + " has the wrong length");
        for (std::size_t c = 0; c < cols; ++c) {
            if (entries[r][c] >= F.q()) fail(ErrorCode::InvalidConfig, "H entry out of field range");
            H(r, c) = F.element(entries[r][c]);
        }
    }
    LrcCode code = code_from_parity_check(F, std::move(H));
    if (j.contains("params")) {
        const Json ps = j.at("params");
        auto& P = code.params;
        P.q = F.q();
        P.r = get<int>(ps, "r");
        P.m = get<int>(ps, "m");
        P.t = get<int>(ps, "t");
        P.e = get<int>(ps, "e");
        P.genus = get<int>(ps, "genus");
        P.backend = parse_backend(get<std::string>(ps, "backend"));
        P.construction = parse_construction(get<std::string>(ps, "construction"));
        P.b = get<int>(ps, "b");
        for (auto a : get<std::vector<std::uint32_t>>(ps, "alphas")) {
            if (a >= F.q()) fail(ErrorCode::InvalidConfig, "alpha out of field range");
            P.alphas.push_back(F.element(a));
        }
    }
    if (j.contains("groups")) {
        code.groups = get<std::vector<std::vector<std::size_t>>>(j, "groups");
        for (const auto& g : code.groups) {
            for (auto c : g) {
                if (c >= cols) fail(ErrorCode::InvalidConfig, "group coordinate out of range");
            }
        }
    }
    if (j.contains("pivot_rows")) code.pivot_rows = get<std::vector<std::size_t>>(j, "pivot_rows");
    if (j.contains("group_places")) code.group_places = get<std::vector<std::vector<std::string>>>(j, "group_places");
    if (j.contains("provenance")) code.provenance = get<std::vector<std::string>>(j, "provenance");
    if (j.contains("t_independent") && !j.at("t_independent").is_null()) code.t_independent = get<bool>(j, "t_independent");
    return code;
}

std::string matrix_csv(const Matrix& M) {
    std::string out;
    for (std::size_t r = 0; r < M.rows(); ++r) {
        out += codeword_csv(M.row(r));
        out += '\n';
    }
    return out;
}

Json report_to_json(const CodeReport& rep) {
    auto opt = [](const auto& v) { return v ? Json(*v) : Json(nullptr); };
    Json j;
    j["n"] = rep.n;
    j["k_exact"] = rep.k_exact;
    j["k_lower_bound"] = opt(rep.k_lower_bound);
    j["d_exact"] = opt(rep.d_exact);
    j["distance_strategy"] = rep.distance_strategy.empty() ? Json(nullptr) : Json(rep.distance_strategy);
    j["d_lower"] = opt(rep.d_lower);
    j["d_singleton_upper"] = opt(rep.d_singleton_upper);
    j["r"] = rep.r;
    j["locality_certified"] = opt(rep.locality_certified);
    j["t"] = opt(rep.t);
    j["t_independence_certified"] = opt(rep.t_independence_certified);
    if (rep.d_exact && rep.r > 0) {
        j["singleton_defect"] = singleton_defect(rep);
    } else {
        j["singleton_defect"] = nullptr;
    }
    Json wit = Json::array();
    for (const auto& w : rep.locality_witnesses) {
        wit.push_back({{"coordinate", w.coordinate}, {"repair_set", w.repair_set}, {"method", w.method}});
    }
    j["locality_witnesses"] = wit;
    j["notes"] = rep.notes;
    return j;
}

std::string codeword_csv(std::span<const FieldElement> word) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(word[i].code);
    }
    return out;
}

ErasedWord parse_codeword_csv(const Field& F, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line) && trim(line).empty()) {
    }
    line = trim(line);
    if (line.empty()) fail(ErrorCode::InvalidConfig, "codeword file is empty");
    ErasedWord out;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) {
        cell = trim(cell);
        if (cell == "?") {
            out.emplace_back(std::nullopt);
            continue;
        }
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(cell, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (cell.empty() || used != cell.size()) fail(ErrorCode::InvalidConfig, "bad codeword symbol '" + cell + "'");
        if (v >= F.q()) fail(ErrorCode::InvalidConfig, "symbol " + cell + " is outside F_" + std::to_string(F.q()));
        out.emplace_back(F.element(static_cast<std::uint32_t>(v)));
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::IoError, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::IoError, "cannot write '" + path + "'");
    out << content;
    if (!out) fail(ErrorCode::IoError, "write to '" + path + "' failed");
}

}  // namespace lrc::io
