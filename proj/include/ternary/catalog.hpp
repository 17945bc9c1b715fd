// Genus catalog: loading, validation, lookup and serialization.
//
// Line-oriented text. Each non-blank line is "key value"; records start at "id" and
// run to the next blank line. '#' starts a comment line. The stream opens with
// "format ternary-catalog 1" and must close with "end <record count>".
#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ternary/arith.hpp"
#include "ternary/catalog_data.hpp"
#include "ternary/forms.hpp"
#include "ternary/spinor.hpp"
#include "ternary/splitting.hpp"

namespace ternary {

class CatalogParseError : public std::runtime_error {
public:
    CatalogParseError(std::size_t line, const std::string& what)
        : std::runtime_error("catalog line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class CatalogValidationError : public std::runtime_error {
public:
    CatalogValidationError(const std::string& record, const std::string& what)
        : std::runtime_error("catalog record " + record + ": " + what), record_(record) {}
    const std::string& record() const { return record_; }

private:
    std::string record_;
};

/// Local data at one prime dividing 2*Delta.
struct LocalData {
    i64 p = 2;
    LocalSplitting splitting;
    i64 split_scale = 1;  ///< splitting describes L_p scaled by this factor
    SpinorNormGroup norms;
    std::optional<int> lambda;              ///< p = 2 cutoff, groups A and B
    std::optional<OddBoundType> odd_type;   ///< odd p, derived from the splitting
    std::string subcase;                    ///< provenance label only
    friend bool operator==(const LocalData&, const LocalData&) = default;

    /// ord_p(n) cutoff when -n*Delta is not a p-adic square.
    std::optional<int> order_bound() const {
        if (p == 2) return lambda;
        if (odd_type) return bound_of(*odd_type);
        return std::nullopt;
    }
};

struct GenusRecord {
    std::string id;
    i64 delta = 0;
    i64 delta_listed = 0;
    std::vector<TernaryForm> sgi;
    std::vector<TernaryForm> sgii;
    std::vector<LocalData> local;
    SquareClassSpec exceptional;
    friend bool operator==(const GenusRecord&, const GenusRecord&) = default;

    char group() const { return id.empty() ? '?' : id.front(); }
    const TernaryForm& spinor_regular() const { return sgi.front(); }

    std::vector<TernaryForm> all_forms() const {
        std::vector<TernaryForm> out = sgi;
        out.insert(out.end(), sgii.begin(), sgii.end());
        return out;
    }

    /// Primes dividing 2*Delta, ascending.
    std::vector<i64> ramified_primes() const {
        std::vector<i64> ps;
        for (const auto& l : local) ps.push_back(l.p);
        return ps;
    }

    const LocalData* local_at(i64 p) const {
        for (const auto& l : local) {
            if (l.p == p) return &l;
        }
        return nullptr;
    }
};

struct Catalog {
    int version = 1;
    std::vector<GenusRecord> records;
    friend bool operator==(const Catalog&, const Catalog&) = default;
};

class UnknownRecordError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

inline const GenusRecord& lookup(const Catalog& catalog, std::string_view id) {
    for (const auto& r : catalog.records) {
        if (r.id == id) return r;
    }
    throw UnknownRecordError("no catalog record with id '" + std::string(id) + "'");
}

namespace detail {

inline TernaryForm parse_form(std::string_view s) {
    const auto parts = split(s, ',');
    if (parts.size() != 6) throw std::invalid_argument("form needs six comma-separated integers, got '" + std::string(s) + "'");
    std::array<i64, 6> c{};
    for (std::size_t i = 0; i < 6; ++i) {
        std::size_t used = 0;
        const std::string tok(parts[i]);
        c[i] = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad coefficient '" + tok + "'");
    }
    return {c[0], c[1], c[2], c[3], c[4], c[5]};
}

inline std::string form_text(const TernaryForm& q) {
    return std::to_string(q.a) + "," + std::to_string(q.b) + "," + std::to_string(q.c) + "," + std::to_string(q.d) +
           "," + std::to_string(q.e) + "," + std::to_string(q.f);
}

inline SpinorNormGroup parse_norms(std::string_view s) {
    if (s.size() < 2 || s.front() != '{' || s.back() != '}') throw std::invalid_argument("norm group must be '{...}', got '" + std::string(s) + "'");
    SpinorNormGroup g;
    for (auto t : split(s.substr(1, s.size() - 2), ',')) g.generators.push_back(parse_product(t));
    return g;
}

inline SquareClassSpec parse_spec(std::string_view s) {
    static const std::regex entry_re(R"(^(\d*)M(\d+)\^2$)");
    SquareClassSpec spec;
    for (auto t : split(s, ',')) {
        std::cmatch m;
        if (!std::regex_match(t.begin(), t.end(), m, entry_re)) throw std::invalid_argument("bad square-class entry '" + std::string(t) + "'");
        spec.entries.push_back({m[1].length() ? std::stoll(m[1].str()) : 1, std::stoll(m[2].str())});
    }
    return spec;
}

inline std::string factored(i64 n) {
    std::string out;
    for (const auto& pp : factor(n)) {
        if (!out.empty()) out += "*";
        out += power_string(pp.p, pp.k);
    }
    return out.empty() ? "1" : out;
}

inline std::optional<OddBoundType> odd_type_of(const LocalSplitting& s) {
    if (!s.diagonal() || s.components.size() != 3) return std::nullopt;
    const int r0 = s.components[0].exponent, r1 = s.components[1].exponent, r2 = s.components[2].exponent;
    if (r0 == 0 && r1 == 1 && r2 == 2) return OddBoundType::one_p_p2;
    if (r0 == 0 && r1 == 2 && r2 == 3) return OddBoundType::one_p2_p3;
    if (r0 == 0 && r1 == 1 && r2 == 3) return OddBoundType::one_p_p3;
    return std::nullopt;
}

}  // namespace detail

/// Enforce every record-level invariant.
inline void validate_record(const GenusRecord& r) {
    static const std::regex id_re(R"(^[ABC][1-9][0-9]*$)");
    auto fail = [&r](const std::string& what) { throw CatalogValidationError(r.id.empty() ? "<unnamed>" : r.id, what); };
    if (!std::regex_match(r.id, id_re)) fail("id must look like A1, B12, C4");
    if (r.delta < 1) fail("delta must be positive");
    if (r.sgi.empty()) fail("no SGI forms");
    if (r.sgii.empty()) fail("no SGII forms");
    for (const auto& q : r.all_forms()) {
        if (!is_positive_definite(q)) fail("form " + to_string(q) + " is not positive definite");
        if (discriminant(q) != r.delta)
            fail("form " + to_string(q) + " has discriminant " + std::to_string(discriminant(q)) + ", record says " + std::to_string(r.delta));
    }
    const auto primes = prime_divisors(2 * r.delta);
    if (r.ramified_primes() != primes) fail("local data must cover exactly the primes dividing 2*delta, in ascending order");
    const i64 detm = matrix_determinant(r.spinor_regular());
    for (const auto& l : r.local) {
        const std::string at = " at p=" + std::to_string(l.p);
        if (l.splitting.p != l.p) fail("splitting prime mismatch" + at);
        if (l.splitting.rank() != 3) fail("splitting rank is not 3" + at);
        int last = -1;
        for (const auto& c : l.splitting.components) {
            if (c.exponent < last) fail("splitting exponents decrease" + at);
            last = c.exponent;
            if (c.kind == SplittingComponent::Kind::unary && c.unit % l.p == 0) fail("splitting unit is not a unit" + at);
            if (c.kind != SplittingComponent::Kind::unary && l.p != 2) fail("plane components only occur at p=2" + at);
        }
        if (l.split_scale != 1 && l.split_scale != 2) fail("split_scale must be 1 or 2" + at);
        // Gram of the scaled lattice is split_scale * M_F / 2; det ~ split_scale * 2 * det(M_F) mod squares.
        if (padic_square_class(l.p, l.splitting.determinant()) != padic_square_class(l.p, l.split_scale * 2 * detm))
            fail("splitting determinant is in the wrong square class" + at);
        if (!l.norms.is_group(l.p)) fail("spinor norm group is not a group containing 1" + at);
        if (l.p == 2) {
            const bool want_lambda = r.group() == 'A' || r.group() == 'B';
            if (want_lambda != l.lambda.has_value()) fail(want_lambda ? "lambda missing at p=2" : "lambda not expected at p=2");
            if (l.lambda && *l.lambda < 0) fail("lambda is negative");
        } else {
            if (l.lambda) fail("lambda only applies at p=2" + at);
            if (!l.odd_type) fail("odd splitting is not one of <1,p,p^2>, <1,p^2,p^3>, <1,p,p^3>" + at);
        }
    }
    if (r.exceptional.entries.empty()) fail("exceptional square-class spec is empty");
    for (const auto& e : r.exceptional.entries) {
        if (e.scale != 1 && e.scale != 2 && e.scale != 3 && e.scale != 4 && e.scale != 16) fail("square-class scale must be 1, 2, 3, 4 or 16");
        if (e.t != 1 && e.t != 2 && e.t != 3 && e.t != 7) fail("square-class parameter t must be 1, 2, 3 or 7");
    }
}

inline void validate_catalog(const Catalog& c) {
    if (c.records.size() != 29) throw CatalogValidationError("<catalog>", "expected 29 records, found " + std::to_string(c.records.size()));
    std::set<std::string> ids;
    int groups[3] = {0, 0, 0};
    for (const auto& r : c.records) {
        validate_record(r);
        if (!ids.insert(r.id).second) throw CatalogValidationError(r.id, "duplicate id");
        ++groups[r.group() - 'A'];
    }
    if (groups[0] != 13 || groups[1] != 12 || groups[2] != 4)
        throw CatalogValidationError("<catalog>", "expected 13 A, 12 B and 4 C records");
}

/// Parse and validate.
inline Catalog load_catalog(std::istream& in) {
    Catalog cat;
    std::string raw;
    std::size_t lineno = 0;
    bool have_format = false;
    bool ended = false;
    std::optional<GenusRecord> cur;
    std::set<std::string> seen_keys;
    std::map<i64, LocalData> locals;

    auto finish = [&](std::size_t at) {
        if (!cur) return;
        if (cur->delta == 0) throw CatalogParseError(at, "record " + cur->id + " has no delta");
        if (cur->delta_listed == 0) cur->delta_listed = cur->delta;
        for (auto& [p, l] : locals) {
            if (l.splitting.components.empty()) throw CatalogParseError(at, "record " + cur->id + " has no splitting at p=" + std::to_string(p));
            if (l.norms.generators.empty()) throw CatalogParseError(at, "record " + cur->id + " has no norm group at p=" + std::to_string(p));
            if (p != 2) l.odd_type = detail::odd_type_of(l.splitting);
            cur->local.push_back(l);
        }
        cat.records.push_back(std::move(*cur));
        cur.reset();
        locals.clear();
        seen_keys.clear();
    };

    while (std::getline(in, raw)) {
        ++lineno;
        const auto line = detail::trim(raw);
        if (ended && !line.empty() && line.front() != '#') throw CatalogParseError(lineno, "content after end marker");
        if (line.empty()) {
            finish(lineno);
            continue;
        }
        if (line.front() == '#') continue;
        const auto sp = line.find_first_of(" \t");
        const std::string key(line.substr(0, sp));
        const auto value = sp == std::string_view::npos ? std::string_view{} : detail::trim(line.substr(sp));
        if (value.empty()) throw CatalogParseError(lineno, "key '" + key + "' has no value");
        try {
            if (!have_format) {
                if (key != "format" || value.substr(0, 15) != "ternary-catalog") throw CatalogParseError(lineno, "expected 'format ternary-catalog <version>'");
                cat.version = static_cast<int>(detail::parse_product(detail::trim(value.substr(15))));
                if (cat.version != 1) throw CatalogParseError(lineno, "unsupported format version");
                have_format = true;
                continue;
            }
            if (key == "end") {
                finish(lineno);
                const i64 count = detail::parse_product(value);
                if (count != static_cast<i64>(cat.records.size()))
                    throw CatalogParseError(lineno, "end marker says " + std::to_string(count) + " records, read " + std::to_string(cat.records.size()));
                ended = true;
                continue;
            }
            if (key == "id") {
                if (cur) throw CatalogParseError(lineno, "records must be separated by a blank line");
                cur.emplace();
                cur->id = std::string(value);
                continue;
            }
            if (!cur) throw CatalogParseError(lineno, "field '" + key + "' outside a record");
            const bool repeatable = key == "sgi" || key == "sgii";
            if (!repeatable && !seen_keys.insert(key).second) throw CatalogParseError(lineno, "duplicate field '" + key + "'");
            if (key == "delta") {
                cur->delta = detail::parse_product(value);
            } else if (key == "delta_listed") {
                cur->delta_listed = detail::parse_product(value);
            } else if (key == "sgi") {
                cur->sgi.push_back(detail::parse_form(value));
            } else if (key == "sgii") {
                cur->sgii.push_back(detail::parse_form(value));
            } else if (key == "exceptional") {
                cur->exceptional = detail::parse_spec(value);
            } else if (key.rfind("local.", 0) == 0) {
                const auto dot = key.find('.', 6);
                if (dot == std::string::npos) throw CatalogParseError(lineno, "local keys look like local.<p>.<field>");
                const i64 p = detail::parse_product(key.substr(6, dot - 6));
                if (!is_prime(p)) throw CatalogParseError(lineno, "local key names non-prime " + std::to_string(p));
                const std::string field = key.substr(dot + 1);
                auto& l = locals[p];
                l.p = p;
                if (field == "split") {
                    l.splitting = parse_splitting(p, value);
                } else if (field == "split_scale") {
                    l.split_scale = detail::parse_product(value);
                } else if (field == "norms") {
                    l.norms = detail::parse_norms(value);
                } else if (field == "lambda") {
                    l.lambda = static_cast<int>(detail::parse_product(value));
                } else if (field == "subcase") {
                    l.subcase = std::string(value);
                } else {
                    throw CatalogParseError(lineno, "unknown local field '" + field + "'");
                }
            } else {
                throw CatalogParseError(lineno, "unknown key '" + key + "'");
            }
        } catch (const CatalogParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw CatalogParseError(lineno, e.what());
        }
    }
    if (!have_format) throw CatalogParseError(lineno, "empty stream");
    if (!ended) throw CatalogParseError(lineno, "unexpected end of stream (missing 'end' marker)");
    validate_catalog(cat);
    return cat;
}

inline Catalog load_catalog(std::string_view text) {
    std::istringstream in{std::string(text)};
    return load_catalog(in);
}

inline const Catalog& default_catalog() {
    static const Catalog cat = load_catalog(default_catalog_text);
    return cat;
}

/// Canonical text form; load_catalog(write_catalog(c)) == c.
inline std::string write_catalog(const Catalog& c) {
    std::ostringstream out;
    out << "format ternary-catalog " << c.version << "\n";
    for (const auto& r : c.records) {
        out << "\nid " << r.id << "\n";
        out << "delta " << detail::factored(r.delta) << "\n";
        out << "delta_listed " << detail::factored(r.delta_listed) << "\n";
        for (const auto& q : r.sgi) out << "sgi " << detail::form_text(q) << "\n";
        for (const auto& q : r.sgii) out << "sgii " << detail::form_text(q) << "\n";
        for (const auto& l : r.local) {
            const std::string k = "local." + std::to_string(l.p) + ".";
            out << k << "split " << to_string(l.splitting) << "\n";
            if (l.split_scale != 1) out << k << "split_scale " << l.split_scale << "\n";
            out << k << "norms {";
            for (std::size_t i = 0; i < l.norms.generators.size(); ++i) out << (i ? "," : "") << l.norms.generators[i];
            out << "}\n";
            if (l.lambda) out << k << "lambda " << *l.lambda << "\n";
            if (!l.subcase.empty()) out << k << "subcase " << l.subcase << "\n";
        }
        out << "exceptional " << to_string(r.exceptional) << "\n";
    }
    out << "\nend " << c.records.size() << "\n";
    return out.str();
}

}  // namespace ternary
