// ternary-spinor: classify integers against the catalog genera and verify the
// exceptional-set characterizations.
//
// Exit status: 0 success, 1 verification mismatch, 2 usage or I/O error.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "ternary/ternary.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ternary::Catalog load(const std::string& path) {
    if (path.empty()) return ternary::default_catalog();
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open catalog '" + path + "'");
    return ternary::load_catalog(in);
}

std::vector<const ternary::GenusRecord*> select(const ternary::Catalog& cat, const std::string& id) {
    std::vector<const ternary::GenusRecord*> out;
    if (id == "all") {
        for (const auto& r : cat.records) out.push_back(&r);
    } else {
        out.push_back(&ternary::lookup(cat, id));
    }
    return out;
}

int cmd_classify(const ternary::Catalog& cat, const std::string& id, ternary::i64 n) {
    if (n < 1) throw UsageError("n must be >= 1");
    const auto& r = ternary::lookup(cat, id);
    const auto c = ternary::classify(r, n);
    std::cout << "record " << r.id << " form " << to_string(r.spinor_regular()) << " n " << n << "\n";
    std::cout << "verdict " << to_string(c.verdict) << "\n";
    switch (c.verdict) {
        case ternary::Verdict::represented:
            std::cout << "witness " << (c.witness ? to_string(*c.witness) : std::string("none")) << "\n";
            break;
        case ternary::Verdict::exceptional:
            std::cout << "matched s=" << c.matched->scale << " t=" << c.matched->t << " (" << to_string(*c.matched) << ")\n";
            break;
        case ternary::Verdict::locally_excluded:
            std::cout << "not represented over Z_" << *c.failing_prime << "\n";
            break;
    }
    return 0;
}

int cmd_local(const ternary::Catalog& cat, const std::string& id, ternary::i64 p, ternary::i64 n) {
    if (n < 1) throw UsageError("n must be >= 1");
    if (!ternary::is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
    const auto& r = ternary::lookup(cat, id);
    const auto v = ternary::local_represents(r.spinor_regular(), p, n);
    std::cout << "record " << r.id << " form " << to_string(r.spinor_regular()) << " p " << p << " n " << n << "\n";
    if (v.unramified) {
        std::cout << "representable (unramified: " << p << " does not divide 2*Delta)\n";
    } else if (v.representable) {
        const auto& c = *v.certificate;
        std::cout << "representable\n";
        std::cout << "certificate residue " << to_string(c.residue) << " mod " << p << "^" << c.residue_precision
                  << ", gradient order " << c.gradient_order << ", F = n mod " << p << "^" << c.congruence_precision() << "\n";
    } else {
        std::cout << "non-representable\n";
        std::cout << "exhausted mod " << p << "^" << v.bound_exponent << " (E = " << v.bound_exponent << ", "
                  << v.levels_searched << " levels searched)\n";
    }
    return 0;
}

int cmd_verify(const ternary::Catalog& cat, const std::string& id, ternary::i64 bound, unsigned jobs) {
    if (bound < 1) throw UsageError("--bound must be >= 1");
    bool ok = true;
    int passed = 0, total = 0;
    for (const auto* r : select(cat, id)) {
        const auto rep = ternary::verify_record(*r, bound, jobs);
        ++total;
        passed += rep.passed();
        ok = ok && rep.passed();
        std::cout << rep.id << " bound " << rep.bound << ": " << (rep.passed() ? "PASS" : "FAIL") << " represented "
                  << rep.represented << " exceptional " << rep.exceptional << " locally_excluded " << rep.locally_excluded
                  << " mismatches " << rep.mismatches.size() << " (" << rep.wall_seconds << " s)\n";
        for (const auto& m : rep.mismatches) std::cout << "  mismatch " << m.kind << " n=" << m.n << " " << m.detail << "\n";
    }
    std::cout << passed << "/" << total << " records passed\n";
    return ok ? 0 : kExitMismatch;
}

int cmd_exceptional_list(const ternary::Catalog& cat, const std::string& id, ternary::i64 bound) {
    if (bound < 1) throw UsageError("--bound must be >= 1");
    for (ternary::i64 n : ternary::exceptional_list(ternary::lookup(cat, id), bound)) std::cout << n << "\n";
    return 0;
}

int cmd_report(const ternary::Catalog& cat, const std::string& id, ternary::i64 bound, const std::string& path, unsigned jobs) {
    if (bound < 1) throw UsageError("--bound must be >= 1");
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write report '" + path + "'");
    for (const auto* r : select(cat, id)) ternary::write_report(out, *r, bound, jobs);
    out.flush();
    if (!out) throw UsageError("error writing report '" + path + "'");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spinor exceptional integers of the spinor regular, non-regular positive ternary forms"};
    app.require_subcommand(1);
    std::string catalog_path;
    app.add_option("--catalog", catalog_path, "Catalog file (default: embedded)");

    std::string id;
    ternary::i64 n = 0, p = 0, bound = 50000;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string output;

    auto* classify = app.add_subcommand("classify", "Classify n for a record");
    classify->add_option("id", id, "Record id, e.g. A8")->required();
    classify->add_option("n", n, "Positive integer")->required();

    auto* verify = app.add_subcommand("verify", "Verify a record (or all) up to a bound");
    verify->add_option("id", id, "Record id or 'all'")->required();
    verify->add_option("--bound", bound, "Largest n checked")->capture_default_str();
    verify->add_option("--jobs", jobs, "Worker threads")->capture_default_str();

    auto* local = app.add_subcommand("local", "Decide n over Z_p for a record's spinor regular form");
    local->add_option("id", id, "Record id")->required();
    local->add_option("p", p, "Prime")->required();
    local->add_option("n", n, "Positive integer")->required();

    auto* exlist = app.add_subcommand("exceptional-list", "List exceptional n up to a bound");
    exlist->add_option("id", id, "Record id")->required();
    exlist->add_option("--bound", bound, "Largest n listed")->capture_default_str();

    auto* report = app.add_subcommand("report", "Write a per-n verdict report");
    report->add_option("id", id, "Record id or 'all'")->required();
    report->add_option("--bound", bound, "Largest n reported")->capture_default_str();
    report->add_option("--output", output, "Output path")->required();
    report->add_option("--jobs", jobs, "Worker threads")->capture_default_str();

    auto* dump = app.add_subcommand("catalog-dump", "Print the catalog in canonical form");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const auto cat = load(catalog_path);
        if (*classify) return cmd_classify(cat, id, n);
        if (*verify) return cmd_verify(cat, id, bound, jobs);
        if (*local) return cmd_local(cat, id, p, n);
        if (*exlist) return cmd_exceptional_list(cat, id, bound);
        if (*report) return cmd_report(cat, id, bound, output, jobs);
        if (*dump) {
            std::cout << ternary::write_catalog(cat);
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ternary::UnknownRecordError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ternary::CatalogParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ternary::CatalogValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
