#ifndef HYPEROVAL_CLI_HPP
#define HYPEROVAL_CLI_HPP

// Command-line front end: construct, verify, classify, crosscheck.
// Exit codes: 0 every check passed, 1 a mathematical check failed,
// 2 usage or I/O error.

#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "io.hpp"

namespace hyperoval::cli {

enum Exit { ok = 0, check_failed = 1, usage = 2 };

struct RunConfig {
    std::string command;
    unsigned q = 0;
    std::string family;  // empty: q2 for q = 2, lambda otherwise
    std::string lambda = "1";
    std::string b;
    std::string ovoid = "classical";
    std::string in, out;
    int jobs = 0;
    std::string scan;  // empty: per-q default
    std::uint64_t seed = 0;
};

/// Raised for inputs that are well-formed JSON/flags but unusable.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int h_of(unsigned q)
{
    for (int h = 1; h <= 5; ++h)
        if ((1u << h) == q) return h;
    throw UsageError("--q must be one of 2, 4, 8, 16, 32");
}

inline ScanLevel scan_level(const RunConfig& c, unsigned q)
{
    if (c.scan.empty()) return default_scan(q);
    if (c.scan == "exhaustive") return ScanLevel::exhaustive;
    if (c.scan == "classes") return ScanLevel::classes;
    if (c.scan == "sample") return ScanLevel::sample;
    throw UsageError("--scan must be exhaustive, classes or sample");
}

inline Vec<4> parse_b(const std::string& text, const Field& f)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    if (parts.size() != 4) throw UsageError("--b expects four comma-separated hex field elements");
    Vec<4> b{};
    for (std::size_t i = 0; i < 4; ++i) b[i] = from_hex(parts[i], f);
    return b;
}

inline std::vector<elem> parse_lambdas(const std::string& text, const Field& f)
{
    std::vector<elem> out;
    if (text == "all") {
        for (unsigned a = 1; a < f.q(); ++a) out.push_back(static_cast<elem>(a));
        return out;
    }
    elem l = from_hex(text, f);
    if (l == 0) throw UsageError("--lambda must be nonzero");
    out.push_back(l);
    return out;
}

inline std::string family_of(const RunConfig& c, unsigned q)
{
    if (!c.family.empty()) return c.family;
    return q == 2 ? "q2" : "lambda";
}

struct Built {
    PointSet h;
    Provenance provenance;
    std::optional<Ovoid> ovoid;  // known generating ovoid, if any
};

inline Ovoid ovoid_from_config(const EllipticSolid& s, const RunConfig& c)
{
    if (c.ovoid == "tits") return tits_ovoid(s);
    if (c.ovoid != "classical") throw UsageError("--ovoid must be classical or tits");
    if (c.b.empty()) throw UsageError("--ovoid classical needs --b");
    return classical_ovoid(s, parse_b(c.b, s.field()));
}

inline json ovoid_params(const Ovoid& o)
{
    json p;
    p["ovoid"] = to_string(o.kind);
    if (o.kind == OvoidKind::classical) p["b"] = point_json(o.b);
    p["base_intersection"] = o.base_intersection;
    return p;
}

inline Built build(const EllipticSolid& s, const RunConfig& c)
{
    const KleinModel& m = s.model();
    const Field& f = m.field();
    const std::string fam = family_of(c, m.q());
    Built out;
    out.provenance.family = fam;
    if (fam == "q2") {
        out.h = h_q2_complement(m);
    } else if (fam == "lambda" || fam == "eq1") {
        if (c.lambda == "all") throw UsageError("--lambda all is only meaningful for crosscheck");
        elem l = parse_lambdas(c.lambda, f).front();
        out.provenance.params["lambda"] = to_hex(l);
        if (fam == "lambda") {
            out.h = h_lambda(s, l, c.jobs);
        } else {
            out.provenance.params["omega"] = to_hex(s.omega());
            PointSet x = eq1_point_set(m, l, s.omega());
            out.h = sc_hyperoval(m, sc_decompose(m, x), x);
        }
    } else if (fam == "ovoid") {
        Ovoid o = ovoid_from_config(s, c);
        out.provenance.params = ovoid_params(o);
        out.h = h_from_ovoid(s, o);
        out.ovoid = std::move(o);
    } else {
        throw UsageError("--family must be lambda, eq1, ovoid or q2");
    }
    return out;
}

/// Kernel-span scans are skipped above q = 8.
inline std::optional<KernelSpan> maybe_kernel_span(const EllipticSolid& s, const PointSet& h, const RunConfig& c)
{
    if (s.q() > 8) return std::nullopt;
    return kernel_span(s, h, scan_level(c, s.q()), c.seed);
}

/// Every check that applies to H: line/plane incidences, the size bound,
/// recovery of the ovoid, the plane profile, the construction steps and the
/// kernel-span lemmas.
inline VerificationReport verify_all(const EllipticSolid& s, const PointSet& h, const std::optional<Ovoid>& known,
                                     const RunConfig& c)
{
    const KleinModel& m = s.model();
    VerificationReport r = verify_hyperoval(m, h, c.jobs, "H");
    r.checks.push_back(min_size_check(m.q(), h.size()));

    std::optional<KernelSpan> ks = maybe_kernel_span(s, h, c);
    std::optional<Ovoid> o;
    try {
        Recovery rec = recover_ovoid_from(s, h, ks ? &*ks : nullptr);
        Check rc = make_check("ovoid recovered from H", validate_ovoid(s, rec.ovoid).ok, "route " + to_string(rec.route));
        rc.counts = {{"size", rec.ovoid.points.size()}, {"|O ∩ Q-|", rec.ovoid.base_intersection}};
        r.checks.push_back(rc);
        if (known)
            r.checks.push_back(make_check("recovered ovoid equals the generating one", rec.ovoid.points == known->points));
        r.checks.push_back(make_check("H_O of the recovered ovoid equals H", h_from_ovoid(s, rec.ovoid) == h));
        o = known ? *known : rec.ovoid;
    } catch (const std::exception& e) {
        r.checks.push_back(make_check("ovoid recovered from H", false, e.what()));
        if (known) o = *known;
    }
    if (known) {
        auto vr = validate_ovoid(s, *known);
        Check vc = make_check("generating ovoid is an ovoid of W(q)", vr.ok);
        vc.counts = {{"size", vr.size},
                     {"bad W(q) lines", vr.bad_wq_lines.size()},
                     {"bad hyperbolic lines", vr.bad_hyperbolic_lines.size()}};
        r.checks.push_back(vc);
    }
    if (!o) return r;

    Check sz = make_check("|H| = (q^2 - i + 1)(q + 2) with i = |O ∩ Q-|",
                          h.size() == (m.q() * m.q() - o->base_intersection + 1) * (m.q() + 2));
    sz.counts = {{"size", h.size()}, {"i", o->base_intersection}};
    r.checks.push_back(sz);
    r.checks.push_back(plane_disjointness_check(s, h, *o));
    for (auto& step : theorem_steps(s, *o, h)) r.checks.push_back(std::move(step));
    const bool classical = recognize_classical(s, o->points).has_value();
    if (m.q() >= 8 && classical) r.checks.push_back(regular_sections_check(s, h, *o, c.jobs));
    if (ks) {
        Check cov = make_check("kernel span scan", true, ks->coverage);
        cov.counts = {{"planes scanned", ks->scanned}, {"random planes", ks->sampled}, {"U planes", ks->u.size()}};
        r.checks.push_back(cov);
        for (auto& k : kernel_span_checks(s, *o, *ks, classical)) r.checks.push_back(std::move(k));
    }
    return r;
}

inline std::unique_ptr<KleinModel> make_model(unsigned q) { return std::make_unique<KleinModel>(Field::standard(h_of(q))); }

inline void emit(const RunConfig& c, const json& j, std::ostream& out)
{
    if (c.out.empty())
        out << j.dump(2) << '\n';
    else
        write_json_file(c.out, j);
}

inline int cmd_construct(const RunConfig& c, std::ostream& out)
{
    auto m = make_model(c.q);
    EllipticSolid s(*m);
    Built b = build(s, c);
    if (!c.out.empty()) write_json_file(c.out, hyperoval_json(*m, b.h, b.provenance));
    json summary{{"q", c.q}, {"family", b.provenance.family}, {"params", b.provenance.params}, {"size", b.h.size()}};
    if (!c.out.empty()) summary["out"] = c.out;
    out << summary.dump() << '\n';
    return ok;
}

inline int cmd_verify(const RunConfig& c, std::ostream& out)
{
    std::unique_ptr<KleinModel> m;
    std::optional<EllipticSolid> s;
    Built b;
    if (!c.in.empty()) {
        HyperovalFile hf = hyperoval_file_from_json(read_json_file(c.in));
        m = make_model(hf.field->q());
        s.emplace(*m);
        b.h = hyperoval_points(*m, hf);
        b.provenance = hf.provenance;
    } else {
        if (c.q == 0) throw UsageError("verify needs --q or --in");
        m = make_model(c.q);
        s.emplace(*m);
        b = build(*s, c);
    }
    VerificationReport r = verify_all(*s, b.h, b.ovoid, c);
    json j;
    j["field"] = field_json(m->field());
    j["construction"] = json{{"family", b.provenance.family}, {"params", b.provenance.params}};
    j["size"] = b.h.size();
    j["report"] = report_json(r);
    emit(c, j, out);
    return r.passed() ? ok : check_failed;
}

inline int cmd_classify(const RunConfig& c, std::ostream& out)
{
    auto m = make_model(c.q);
    EllipticSolid s(*m);
    const Field& f = m->field();
    json j;
    j["field"] = field_json(f);
    bool passed = true;
    if (!c.b.empty() || c.ovoid == "tits") {
        Ovoid o = ovoid_from_config(s, c);
        j["ovoid"] = ovoid_params(o);
        if (o.kind == OvoidKind::classical) {
            j["class"] = classify_classical(s, o).to_string();
        } else {
            j["class"] = "nonclassical";
        }
        emit(c, j, out);
        return ok;
    }
    OrbitCount oc = orbit_count_trace_zero(f);
    json reps = json::array();
    for (auto e : oc.representatives) reps.push_back(to_hex(e));
    j["trace_zero_orbits"] = json{{"N", oc.n}, {"representatives", reps}};
    ClassSweep cs = classify_sweep(s, c.jobs);
    j["b_elliptic"] = cs.elliptic;
    j["b_non_elliptic"] = cs.non_elliptic;
    json classes = json::array();
    for (const auto& [t, n] : cs.classes)
        classes.push_back(json{{"i", t.i}, {"rep", t.rep ? to_hex(*t.rep) : "tangent"}, {"b_count", n}});
    j["classes"] = std::move(classes);
    j["class_count"] = cs.classes.size();
    j["expected"] = oc.n + 1;
    passed = cs.classes.size() == oc.n + 1;
    j["passed"] = passed;
    emit(c, j, out);
    return passed ? ok : check_failed;
}

inline int cmd_crosscheck(const RunConfig& c, std::ostream& out)
{
    auto m = make_model(c.q);
    EllipticSolid s(*m);
    const Field& f = m->field();
    json j;
    j["field"] = field_json(f);
    json rows = json::array();
    bool passed = true;
    auto recovered_route = [&](const PointSet& h, json& row) {
        std::optional<KernelSpan> ks = maybe_kernel_span(s, h, c);
        Recovery rec = recover_ovoid_from(s, h, ks ? &*ks : nullptr);
        row["recovery_route"] = to_string(rec.route);
        row["recovered_ovoid"] = json{{"valid", validate_ovoid(s, rec.ovoid).ok},
                                      {"base_intersection", rec.ovoid.base_intersection}};
        return h_from_ovoid(s, rec.ovoid) == h;
    };
    if (m->q() == 2) {
        PointSet h = h_q2_complement(*m);
        json row{{"family", "q2"}, {"size", h.size()}};
        bool eq = recovered_route(h, row);
        row["h_from_recovered_ovoid"] = eq;
        passed = passed && eq;
        rows.push_back(row);
    } else {
        for (elem l : parse_lambdas(c.lambda, f)) {
            json row{{"lambda", to_hex(l)}};
            PointSet hl = h_lambda(s, l, c.jobs);
            PointSet x = eq1_point_set(*m, l, s.omega());
            bool eq1 = false;
            try {
                eq1 = sc_hyperoval(*m, sc_decompose(*m, x), x) == hl;
            } catch (const std::domain_error& e) {
                row["eq1_error"] = e.what();
            }
            bool ho = recovered_route(hl, row);
            row["size"] = hl.size();
            row["eq1_sc_equals_h_lambda"] = eq1;
            row["h_from_recovered_ovoid"] = ho;
            passed = passed && eq1 && ho;
            rows.push_back(row);
        }
    }
    j["rows"] = std::move(rows);
    j["passed"] = passed;
    emit(c, j, out);
    return passed ? ok : check_failed;
}

/// Parses argv and runs one subcommand.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    CLI::App app{"Hyperovals of the Klein quadric from ovoids of W(q)"};
    app.require_subcommand(1);
    RunConfig c;

    auto common = [&](CLI::App* sub, bool need_q) {
        auto* qopt = sub->add_option("--q", c.q, "field order (2, 4, 8, 16, 32)");
        if (need_q) qopt->required();
        sub->add_option("--jobs", c.jobs, "worker threads (0: all cores)");
        sub->add_option("--out", c.out, "write JSON here instead of stdout");
    };
    auto construction = [&](CLI::App* sub) {
        sub->add_option("--family", c.family, "lambda | eq1 | ovoid | q2")
            ->check(CLI::IsMember({"lambda", "eq1", "ovoid", "q2"}));
        sub->add_option("--lambda", c.lambda, "nonzero field element in hex");
        sub->add_option("--b", c.b, "classical ovoid parameter, four hex elements b1,b2,b3,b4");
        sub->add_option("--ovoid", c.ovoid, "classical | tits")->check(CLI::IsMember({"classical", "tits"}));
    };
    auto scanning = [&](CLI::App* sub) {
        sub->add_option("--scan", c.scan, "kernel-span plane scan: exhaustive | classes | sample")
            ->check(CLI::IsMember({"exhaustive", "classes", "sample"}));
        sub->add_option("--seed", c.seed, "seed for sampled scans");
    };

    auto* construct = app.add_subcommand("construct", "build a hyperoval and write it as JSON");
    common(construct, true);
    construction(construct);

    auto* verify = app.add_subcommand("verify", "run every check on a constructed or stored hyperoval");
    common(verify, false);
    construction(verify);
    scanning(verify);
    verify->add_option("--in", c.in, "hyperoval JSON file");

    auto* classify = app.add_subcommand("classify", "classify the classical ovoids up to the stabilizer of Q-");
    common(classify, true);
    classify->add_option("--b", c.b, "classify just this classical ovoid");
    classify->add_option("--ovoid", c.ovoid, "classical | tits")->check(CLI::IsMember({"classical", "tits"}));

    auto* crosscheck = app.add_subcommand("crosscheck", "compare the construction routes as point sets");
    common(crosscheck, true);
    crosscheck->add_option("--lambda", c.lambda, "hex value or 'all'");
    scanning(crosscheck);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage;
    }

    c.command = app.get_subcommands().front()->get_name();
    try {
        if (c.command == "crosscheck" && c.lambda == "1" && !crosscheck->count("--lambda")) c.lambda = "all";
        if (c.q != 0) h_of(c.q);
        if (c.command == "construct") return cmd_construct(c, out);
        if (c.command == "verify") return cmd_verify(c, out);
        if (c.command == "classify") return cmd_classify(c, out);
        return cmd_crosscheck(c, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "check failed: " << e.what() << '\n';
        return check_failed;
    }
}

}  // namespace hyperoval::cli

#endif  // HYPEROVAL_CLI_HPP
