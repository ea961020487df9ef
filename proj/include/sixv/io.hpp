#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sixv/bigfloat.hpp"
#include "sixv/enumeration.hpp"
#include "sixv/partition.hpp"

namespace sixv {

inline constexpr int kSchemaVersion = 1;

// Decimal rendering of an exact rational at a requested number of significant
// digits (presentation only; serialization keeps "p/q" strings).
inline std::string rational_to_decimal(const Rational& r, int digits) {
    ScopedPrecision prec(static_cast<unsigned>(digits * 3.33) + 16);
    return to_bigfloat(r).str(digits, std::ios_base::scientific);
}

inline nlohmann::json chain_to_json(const HankelChain& chain, const PartitionValue& z) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["N"] = chain.N;
    j["x"] = chain.x.str();
    std::vector<std::string> tau, h;
    for (const auto& t : chain.tau) tau.push_back(t.get_str());
    for (const auto& v : chain.h) h.push_back(v.get_str());
    j["tau"] = tau;
    j["h"] = h;
    j["Z"] = z.Z.get_str();
    return j;
}

struct ChainWithZ {
    HankelChain chain;
    PartitionValue z;
};

inline ChainWithZ chain_from_json(const nlohmann::json& j) {
    ChainWithZ out;
    out.chain.x = RationalParameter::parse(j.at("x").get<std::string>());
    out.chain.N = j.at("N").get<std::size_t>();
    for (const auto& s : j.at("tau")) {
        Rational r;
        r.set_str(s.get<std::string>(), 10);
        out.chain.tau.push_back(r);
    }
    for (const auto& s : j.at("h")) {
        Rational r;
        r.set_str(s.get<std::string>(), 10);
        out.chain.h.push_back(r);
    }
    out.z.N = out.chain.N;
    out.z.x = out.chain.x;
    out.z.Z.set_str(j.at("Z").get<std::string>(), 10);
    return out;
}

inline nlohmann::json configuration_to_json(const Configuration& c) {
    nlohmann::json j;
    j["N"] = c.N;
    j["horizontal"] = c.horizontal;  // true = right
    j["vertical"] = c.vertical;      // true = up
    j["counts"] = c.counts;
    j["n_a"] = c.n_class(VertexClass::A);
    j["n_b"] = c.n_class(VertexClass::B);
    j["n_c"] = c.n_class(VertexClass::C);
    return j;
}

// RFC 4180 CSV writer: header row, CRLF-free (LF) lines, quoting only when a
// field contains a comma, quote or newline.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& os) : os_(os) {}

    void row(const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) os_ << ',';
            os_ << escape(fields[i]);
        }
        os_ << '\n';
    }

    static std::string escape(const std::string& f) {
        if (f.find_first_of(",\"\n") == std::string::npos) return f;
        std::string out = "\"";
        for (char c : f) {
            if (c == '"') out += '"';
            out += c;
        }
        out += '"';
        return out;
    }

private:
    std::ostream& os_;
};

inline std::string format_double(double v, int digits = 17) {
    std::ostringstream os;
    os.precision(digits);
    os << v;
    return os.str();
}

}  // namespace sixv
