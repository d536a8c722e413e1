#include <cstdint>
#include <ostream>
#include <sstream>

#include "gmcc/catalog.hpp"
#include "json.hpp"

namespace gmcc {

namespace {

using nlohmann::ordered_json;

constexpr std::uint64_t kMaxSafeInteger = std::uint64_t{1} << 53;

ordered_json safe_int(std::uint64_t v) {
    if (v > kMaxSafeInteger) return std::to_string(v);
    return v;
}

ordered_json safe_int(std::int64_t v) {
    const std::uint64_t mag = v < 0 ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
    if (mag > kMaxSafeInteger) return std::to_string(v);
    return v;
}

std::uint64_t read_u64(const ordered_json& j) {
    if (j.is_string()) return std::stoull(j.get<std::string>());
    return j.get<std::uint64_t>();
}

std::int64_t read_i64(const ordered_json& j) {
    if (j.is_string()) return std::stoll(j.get<std::string>());
    return j.get<std::int64_t>();
}

std::string sizes_string(const std::vector<std::uint32_t>& sizes) {
    std::string s;
    for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? "x" : "") + std::to_string(sizes[i]);
    return s;
}

ordered_json record_json(const QuantumCodeRecord& r) {
    ordered_json j;
    j["q"] = r.q;
    j["lambda"] = r.lambda;
    j["m"] = r.m;
    j["sizes"] = r.sizes;
    j["t"] = r.t;
    j["n"] = safe_int(r.n);
    j["k"] = safe_int(r.k);
    j["d_bound"] = r.d_bound;
    j["d_exact"] = r.d_exact ? ordered_json(*r.d_exact) : ordered_json(nullptr);
    j["method"] = r.method;
    j["work"] = safe_int(r.work);
    j["singleton"] = {{"defect", r.singleton.defect}, {"label", r.singleton.to_string()}};
    j["qgv_beaten"] = r.qgv_beaten;
    j["qgv_preconditions"] = r.qgv_preconditions;
    j["construction"] = r.construction;
    return j;
}

SingletonLabel label_from(const std::string& s) {
    if (s == "MDS") return SingletonLabel::kMds;
    if (s == "QHAMDS") return SingletonLabel::kQhamds;
    return SingletonLabel::kDefect;
}

}  // namespace

std::string to_json(const std::vector<QuantumCodeRecord>& records) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : records) arr.push_back(record_json(r));
    return arr.dump(2);
}

std::vector<QuantumCodeRecord> records_from_json(const std::string& text) {
    ordered_json arr;
    try {
        arr = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
    if (!arr.is_array()) throw UsageError("expected a JSON array of records");
    std::vector<QuantumCodeRecord> out;
    for (const auto& j : arr) {
        QuantumCodeRecord r;
        r.q = j.at("q").get<std::uint32_t>();
        r.lambda = j.at("lambda").get<std::uint32_t>();
        r.m = j.at("m").get<std::uint32_t>();
        r.sizes = j.at("sizes").get<std::vector<std::uint32_t>>();
        r.t = j.at("t").get<std::uint32_t>();
        r.n = read_u64(j.at("n"));
        r.k = read_i64(j.at("k"));
        r.d_bound = j.at("d_bound").get<std::uint32_t>();
        if (!j.at("d_exact").is_null()) r.d_exact = j.at("d_exact").get<std::uint32_t>();
        r.method = j.at("method").get<std::string>();
        r.work = read_u64(j.at("work"));
        r.singleton.defect = j.at("singleton").at("defect").get<std::int64_t>();
        r.singleton.label = label_from(j.at("singleton").at("label").get<std::string>());
        r.qgv_beaten = j.at("qgv_beaten").get<bool>();
        r.qgv_preconditions = j.at("qgv_preconditions").get<bool>();
        r.construction = j.at("construction").get<std::string>();
        out.push_back(std::move(r));
    }
    return out;
}

void emit(const std::vector<QuantumCodeRecord>& records, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::kJson) {
        out << to_json(records) << '\n';
    } else {
        out << "q,lambda,m,sizes,t,n,k,d_bound,d_exact,method,singleton,qgv\n";
        for (const auto& r : records) {
            out << r.q << ',' << r.lambda << ',' << r.m << ',' << sizes_string(r.sizes) << ',' << r.t << ',' << r.n
                << ',' << r.k << ',' << r.d_bound << ',' << (r.d_exact ? std::to_string(*r.d_exact) : "") << ','
                << r.method << ',' << r.singleton.to_string() << ',' << (r.qgv_beaten ? "yes" : "no") << '\n';
        }
    }
    if (!out) throw UsageError("failed to write output");
}

}  // namespace gmcc
