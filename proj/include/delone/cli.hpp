#pragma once

// Command-line front end. `run` never calls exit(); it returns the process exit code
//   0 pass, 2 usage or invalid input, 3 verification failure, 4 internal error
// and writes reports to `out`, diagnostics and runtimes to `err`. Runtimes stay out of the
// reports so that the same inputs and seed always produce byte-identical output.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "delone/boundaries.hpp"
#include "delone/cutproject.hpp"
#include "delone/density.hpp"
#include "delone/folner.hpp"
#include "delone/io.hpp"
#include "delone/lattices.hpp"
#include "delone/verify.hpp"

namespace delone::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kPass = 0, kUsage = 2, kVerificationFailure = 3, kInternal = 4 };

/// A checked claim did not hold; carries the report to print before exiting with 3.
struct VerificationFailure {
    std::string message;
};

namespace detail {

inline std::string str(const Rational& r) { return r.get_str(); }

inline std::vector<std::int64_t> parse_ints(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::int64_t> v;
    for (std::string tok; in >> tok;) v.push_back(delone::detail::parse_integer(tok));
    return v;
}

/// Endpoint pairs "a b [c d ...]" → union of [a, b) with a, b rational, decimal or a+b*phi.
inline PhiIntervalSet parse_phi_window(const std::vector<std::string>& endpoints) {
    if (endpoints.empty() || endpoints.size() % 2 != 0)
        throw Error(ErrorCode::Parse, "--window expects pairs of endpoints 'lo hi'");
    std::vector<PhiIntervalSet::Interval> parts;
    for (std::size_t i = 0; i < endpoints.size(); i += 2) {
        QPhi a = parse_qphi(endpoints[i]), b = parse_qphi(endpoints[i + 1]);
        if (!(a < b)) throw Error(ErrorCode::EmptySet, "window interval [" + endpoints[i] + ", " + endpoints[i + 1] + ") is empty");
        parts.emplace_back(std::move(a), std::move(b));
    }
    return PhiIntervalSet::from_intervals(std::move(parts));
}

inline CyclicWindow parse_cyclic_window(std::int64_t modulus, const std::vector<std::string>& residues) {
    if (residues.empty()) throw Error(ErrorCode::Parse, "--window expects residues for the cyclic scheme");
    std::vector<std::int64_t> r;
    for (const auto& t : residues) r.push_back(delone::detail::parse_integer(t));
    return CyclicWindow(modulus, r);
}

inline std::string join(const std::vector<std::string>& parts) {
    std::string s;
    for (const auto& p : parts) s += (s.empty() ? "" : " ") + p;
    return s;
}

inline Lattice parse_lattice(const GroupCtx& ctx, const std::vector<std::string>& basis) {
    const auto entries = parse_ints(join(basis));
    if (ctx.kind() == GroupKind::HeisenbergInt) {
        if (entries.size() != 1) throw Error(ErrorCode::Parse, "H3 lattices are given by a single n (Gamma_n)");
        return Lattice::heisenberg_gamma(entries[0]);
    }
    if (ctx.kind() != GroupKind::IntLattice) throw Error(ErrorCode::Unsupported, "lattices are supported in Z^d and H3");
    const auto lat = Lattice::int_sublattice(entries);
    if (!(lat.ctx() == ctx)) throw Error(ErrorCode::Parse, "basis size does not match " + ctx.name());
    return lat;
}

inline FolnerSeq default_sequence(const GroupCtx& ctx) {
    switch (ctx.kind()) {
        case GroupKind::IntLattice: return FolnerSeq::cubes_zd(ctx.dim());
        case GroupKind::HeisenbergInt: return FolnerSeq::heisenberg_boxes();
        case GroupKind::RealBoxes: return FolnerSeq::cubes_rd(ctx.dim());
    }
    throw Error(ErrorCode::Unsupported, "no default Følner sequence");
}

/// Symmetric unit neighbourhood of radius r: a centred cube, made inverse-closed in H3.
inline GSet centred_ball(const GroupCtx& ctx, std::int64_t r) {
    if (!ctx.discrete()) {
        const auto d = static_cast<std::size_t>(ctx.dim());
        const Rational rr(static_cast<long>(r));
        return BoxSet::box(Box{RealPoint(d, Rational(-rr)), RealPoint(d, rr)});
    }
    const PointSet cube = default_patch(ctx, r);
    return unite(cube, inverse_set(ctx, cube));
}

inline GSet read_set_file(const std::string& path, const GroupCtx& expected) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
    auto [ctx, set] = read_gset(in);
    if (!(ctx == expected)) throw Error(ErrorCode::Parse, "'" + path + "' declares " + ctx.name() + ", expected " + expected.name());
    return set;
}

/// Writes to the named file, or to `out` when the name is empty or "-".
template <class F>
void emit(const std::string& path, std::ostream& out, F&& write) {
    if (path.empty() || path == "-") {
        write(out);
        return;
    }
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::Parse, "cannot write '" + path + "'");
    write(f);
}

inline Json cert_pair(const Rational& minus, Cert mc, const Rational& plus, Cert pc) {
    return Json{{"minus", str(minus)}, {"minus_cert", to_string(mc)}, {"plus", str(plus)}, {"plus_cert", to_string(pc)}};
}

inline int exit_code_for(ErrorCode c) {
    switch (c) {
        case ErrorCode::NotCovering:
        case ErrorCode::NoWindowFound:
        case ErrorCode::NoCertificate:
        case ErrorCode::MissingWitness: return kVerificationFailure;
        case ErrorCode::Overflow: return kInternal;
        default: return kUsage;
    }
}

}  // namespace detail

// ---- subcommands ----------------------------------------------------------------------------

struct GenModelsetArgs {
    std::string scheme = "fib";
    std::int64_t modulus = 5;
    std::vector<std::string> window;
    std::vector<std::string> range{"0", "100"};
    std::string out;
};

inline void gen_modelset(const GenModelsetArgs& a, std::ostream& out, std::ostream& err) {
    if (a.range.size() != 2) throw Error(ErrorCode::Parse, "--range expects 'lo hi'");
    if (a.scheme == "fib") {
        const auto w = detail::parse_phi_window(a.window);
        const auto pts = FibonacciScheme().patch(w, parse_qphi(a.range[0]), parse_qphi(a.range[1]));
        detail::emit(a.out, out, [&](std::ostream& o) { write_phi_points(o, pts); });
        err << "points=" << pts.size() << "\n";
        return;
    }
    if (a.scheme == "cyclic") {
        const CyclicScheme cs(a.modulus);
        const auto w = detail::parse_cyclic_window(a.modulus, a.window);
        const auto lo = delone::detail::parse_integer(a.range[0]), hi = delone::detail::parse_integer(a.range[1]);
        if (lo >= hi) throw Error(ErrorCode::EmptyRegion, "--range is empty");
        const PointSet pts = cs.patch(w, PointSet::box({lo}, {hi}));
        detail::emit(a.out, out, [&](std::ostream& o) { write_gset(o, cs.ctx(), pts); });
        err << "points=" << pts.size() << "\n";
        return;
    }
    throw Error(ErrorCode::Parse, "--scheme must be fib or cyclic");
}

struct DensityFormulaArgs {
    std::string scheme = "fib";
    std::int64_t modulus = 5;
    std::vector<std::string> window;
    std::int64_t n = 1000;
};

/// The Fibonacci patch deviates from T·m_H(W)/√5 by at most C·(4/T)·T points, C as in the suite.
inline Json density_formula(const DensityFormulaArgs& a) {
    Json j;
    j["command"] = "density-formula";
    j["input"] = {{"scheme", a.scheme}, {"window", a.window}, {"n", a.n}};
    DensityFormulaReport rep;
    Rational delta;
    if (a.scheme == "fib") {
        const auto w = detail::parse_phi_window(a.window);
        j["input"]["window_parsed"] = w.str();
        j["group"] = "R1";
        j["haar_normalization"] = "Lebesgue measure on G = R and H = R; covol = sqrt(5)";
        rep = density_formula_check(FibonacciScheme(), w, FolnerSeq::cubes_rd(1), a.n);
        delta = verify::kFibonacciDeviationConstant * make_rational(4, a.n);
        j["sequence"] = "cubes_R1: [0, n)";
        j["deviation_constant"] = verify::kFibonacciDeviationConstant;
    } else if (a.scheme == "cyclic") {
        const CyclicScheme cs(a.modulus);
        const auto w = detail::parse_cyclic_window(a.modulus, a.window);
        j["input"]["modulus"] = a.modulus;
        j["input"]["window_parsed"] = w.str();
        j["group"] = "Z1";
        j["haar_normalization"] = "counting measure on G = Z and H = Z/N; covol = N";
        rep = density_formula_check(cs, w, FolnerSeq::cubes_zd(1), a.n);
        delta = make_rational(w.size(), a.n);  // one incomplete period
        j["sequence"] = "cubes_Z1: {0..n-1}";
    } else {
        throw Error(ErrorCode::Parse, "--scheme must be fib or cyclic");
    }
    j["n"] = rep.n;
    j["count"] = rep.count;
    j["measure"] = detail::str(rep.measure);
    j["empirical"] = detail::str(rep.empirical);
    j["empirical_decimal"] = rep.empirical.get_d();
    j["target_lo"] = detail::str(rep.target_lo);
    j["target_hi"] = detail::str(rep.target_hi);
    j["target_exact"] = rep.target_exact;
    j["allowed_deviation"] = detail::str(delta);
    const bool ok = rep.target_lo - delta <= rep.empirical && rep.empirical <= rep.target_hi + delta;
    j["within_allowed_deviation"] = ok;
    if (!ok) throw VerificationFailure{j.dump(2)};
    return j;
}

struct AlmostPeriodsArgs {
    std::string scheme = "fib";
    std::int64_t modulus = 5;
    std::vector<std::string> window;
    std::string eps = "1/10";
    std::vector<std::string> range{"0", "10000"};
    int samples = 20;
    std::uint64_t seed = 1;
};

/// Reports U, the edge window WU ∩ WᶜU and the periods t ∈ Λ_U in the range, and checks
/// Λ_W △ (Λ_W + t) ⊆ Λ_edge patchwise for `samples` seeded draws of t. `empirical` is the
/// largest observed card(Λ_W △ (Λ_W + t)) / length; `target_hi` bounds the edge density.
inline Json almost_periods_cmd(const AlmostPeriodsArgs& a) {
    if (a.range.size() != 2) throw Error(ErrorCode::Parse, "--range expects 'lo hi'");
    const Rational eps = parse_rational(a.eps);
    Json j;
    j["command"] = "almost-periods";
    j["input"] = {{"scheme", a.scheme}, {"window", a.window}, {"eps", detail::str(eps)}, {"range", a.range},
                  {"samples", a.samples}, {"seed", a.seed}};
    Rng rng = case_rng(a.seed, 0);
    bool all_included = true;
    Rational worst = 0;
    Json checks = Json::array();
    if (a.scheme == "fib") {
        const FibonacciScheme fs;
        const auto w = detail::parse_phi_window(a.window);
        const QPhi lo = parse_qphi(a.range[0]), hi = parse_qphi(a.range[1]);
        const auto len = enclose(hi - lo, sqrt5_enclosure());
        const auto ap = almost_periods(fs, w, eps, lo, hi);
        j["group"] = "R1";
        j["haar_normalization"] = "Lebesgue measure on G = R and H = R; covol = sqrt(5)";
        j["u"] = detail::str(ap.u);
        j["U"] = "[-" + ap.u.get_str() + ", " + ap.u.get_str() + "]";
        j["edge"] = ap.edge.str();
        j["target_lo"] = "0";
        j["target_hi"] = detail::str(ap.bound.hi);
        j["steps"] = ap.steps;
        j["n"] = ap.periods.size();
        Json first = Json::array();
        for (std::size_t i = 0; i < ap.periods.size() && i < 10; ++i) first.push_back(ap.periods[i].str());
        j["first_periods"] = first;
        for (int s = 0; s < a.samples && !ap.periods.empty(); ++s) {
            const auto& t = ap.periods[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(ap.periods.size()) - 1))];
            const auto pc = check_almost_period(fs, w, ap.edge, t, lo, hi);
            // lower end of the length enclosure gives an upper bound for the density
            const Rational dens = Rational(static_cast<long>(pc.symdiff)) / len.lo;
            if (dens > worst) worst = dens;
            all_included = all_included && pc.included;
            checks.push_back({{"t", t.str()}, {"symdiff", pc.symdiff}, {"included", pc.included}});
        }
    } else if (a.scheme == "cyclic") {
        const CyclicScheme cs(a.modulus);
        const auto w = detail::parse_cyclic_window(a.modulus, a.window);
        const auto lo = delone::detail::parse_integer(a.range[0]), hi = delone::detail::parse_integer(a.range[1]);
        if (lo >= hi) throw Error(ErrorCode::EmptyRegion, "--range is empty");
        const PointSet region = PointSet::box({lo}, {hi});
        const auto ap = almost_periods(cs, w, eps, region);
        j["input"]["modulus"] = a.modulus;
        j["group"] = "Z1";
        j["haar_normalization"] = "counting measure on G = Z and H = Z/N; covol = N";
        j["U"] = "{-" + std::to_string(ap.k) + ".." + std::to_string(ap.k) + "}";
        j["edge"] = ap.edge.str();
        j["target_lo"] = "0";
        j["target_hi"] = detail::str(ap.bound);
        j["steps"] = ap.steps;
        j["n"] = ap.periods.size();
        const auto periods = ap.periods.elements();
        for (int s = 0; s < a.samples && !periods.empty(); ++s) {
            const auto t = periods[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(periods.size()) - 1))][0];
            const auto pc = check_almost_period(cs, w, ap.edge, t, region);
            const Rational dens = make_rational(pc.symdiff, hi - lo);
            if (dens > worst) worst = dens;
            all_included = all_included && pc.included;
            checks.push_back({{"t", t}, {"symdiff", pc.symdiff}, {"included", pc.included}});
        }
    } else {
        throw Error(ErrorCode::Parse, "--scheme must be fib or cyclic");
    }
    j["empirical"] = detail::str(worst);
    j["empirical_decimal"] = worst.get_d();
    j["checks"] = checks;
    j["all_included"] = all_included;
    if (!all_included) throw VerificationFailure{j.dump(2)};
    return j;
}

struct BoundaryArgs {
    std::string group = "Z2";
    std::string kind = "strong";
    std::string k_file, a_file, out;
    bool compare = false;
};

inline void boundary_cmd(const BoundaryArgs& a, std::ostream& out) {
    const GroupCtx ctx = GroupCtx::parse(a.group);
    const GSet k = detail::read_set_file(a.k_file, ctx);
    const GSet s = detail::read_set_file(a.a_file, ctx);
    if (a.compare) {
        const auto c = compare_boundaries(ctx, k, s);
        Json j;
        j["command"] = "boundary";
        j["input"] = {{"group", a.group}, {"K", a.k_file}, {"A", a.a_file}};
        j["haar_normalization"] = ctx.haar_normalization();
        j["mode"] = ctx.discrete() ? "set inclusion" : "measure inequality";
        j["strong_in_vanhove"] = c.strong_in_vanhove;
        j["vanhove_in_strong_k2"] = c.vanhove_in_strong_k2;
        j["folner_in_strong"] = c.folner_in_strong;
        j["strong_in_k_folner"] = c.strong_in_k_folner;
        j["strong_of_ka_in_folner_k2"] = c.strong_of_ka_in_folner_k2;
        j["all"] = c.all();
        if (!c.all()) throw VerificationFailure{j.dump(2)};
        out << j.dump(2) << "\n";
        return;
    }
    const GSet b = boundary(ctx, parse_boundary_kind(a.kind), k, s);
    detail::emit(a.out, out, [&](std::ostream& o) { write_gset(o, ctx, b); });
}

struct FolnerRatioArgs {
    std::string family = "comb";
    int dim = 1;
    std::string eps = "1/10";
    std::string kind = "strong";
    std::string k_file;
    std::vector<std::int64_t> ns{10, 100, 1000};
    bool thicken = false;
};

/// CSV rows "n,ratio" with the exact ratio m(boundary)/m(A_n).
inline void folner_ratio_cmd(const FolnerRatioArgs& a, std::ostream& out) {
    std::optional<FolnerSeq> seq;
    if (a.family == "comb") seq = FolnerSeq::comb_r1(parse_rational(a.eps));
    else if (a.family == "cubes-z") seq = FolnerSeq::cubes_zd(a.dim);
    else if (a.family == "cubes-r") seq = FolnerSeq::cubes_rd(a.dim);
    else if (a.family == "heisenberg") seq = FolnerSeq::heisenberg_boxes();
    else throw Error(ErrorCode::Parse, "--family must be comb, cubes-z, cubes-r or heisenberg");
    const GroupCtx ctx = seq->ctx();
    GSet k = a.k_file.empty() ? (a.family == "comb" ? seq->eps_neighborhood() : detail::centred_ball(ctx, 1))
                              : detail::read_set_file(a.k_file, ctx);
    if (a.thicken) seq = thicken(ctx, *seq, detail::centred_ball(ctx, 1));
    const auto kind = parse_boundary_kind(a.kind);
    const auto ratios = parallel_map<Rational>(a.ns.size(), [&](std::size_t i) { return ratio(ctx, *seq, a.ns[i], k, kind); });
    out << "n,ratio\n";
    for (std::size_t i = 0; i < a.ns.size(); ++i) out << a.ns[i] << "," << ratios[i].get_str() << "\n";
}

struct LatticeArgs {
    std::string group = "Z2";
    std::vector<std::string> basis;
    std::string op = "covol";
    std::int64_t n = 12;
    std::int64_t patch = 6;
};

inline void lattice_cmd(const LatticeArgs& a, std::ostream& out, std::ostream& err) {
    const GroupCtx ctx = GroupCtx::parse(a.group);
    const Lattice lat = detail::parse_lattice(ctx, a.basis);
    if (a.op == "covol") {
        out << lat.covolume().get_str() << "\n";
    } else if (a.op == "fd") {
        const GSet f = lat.fundamental_domain();
        const auto t = tiling_check(lat, f, default_patch(ctx, a.patch));
        if (!t.ok()) throw VerificationFailure{"fundamental domain does not tile the patch"};
        err << "tiling checked on " << t.checked << " patch elements\n";
        write_gset(out, ctx, f);
    } else if (a.op == "density") {
        out << lattice_density(lat, detail::default_sequence(ctx), a.n).get_str() << "\n";
    } else {
        throw Error(ErrorCode::Parse, "--op must be covol, fd or density");
    }
}

struct DensityArgs {
    std::string source = "lattice";
    std::string group = "Z2";
    std::vector<std::string> basis;
    std::int64_t modulus = 5;
    std::vector<std::string> window;
    std::string points;
    std::vector<std::string> gamma;
    std::int64_t n = 12;
    std::int64_t witness_radius = 0;
};

/// Density report for one measure: Følner-averaged value, Beurling and Leptin values and the
/// standard-estimate window, each with its certification flag; optionally lattice-relative
/// densities with respect to Γ (`--gamma`).
inline Json density_cmd(const DensityArgs& a) {
    std::optional<GroupCtx> ctx;
    std::optional<PMeasure> nu;
    std::optional<Lattice> period;
    std::int64_t radius = a.witness_radius;
    Json j;
    j["command"] = "density";
    j["input"] = {{"source", a.source}, {"n", a.n}};
    if (a.source == "lattice") {
        ctx = GroupCtx::parse(a.group);
        period = detail::parse_lattice(*ctx, a.basis);
        nu = period->dirac_comb();
        j["input"]["group"] = a.group;
        j["input"]["basis"] = detail::join(a.basis);
        if (radius == 0) {
            if (ctx->kind() == GroupKind::HeisenbergInt) radius = period->heisenberg_n();
            else
                for (const auto& row : period->basis())
                    for (auto x : row) radius += x < 0 ? -x : x;
        }
    } else if (a.source == "cyclic") {
        const CyclicScheme cs(a.modulus);
        const auto w = detail::parse_cyclic_window(a.modulus, a.window);
        ctx = cs.ctx();
        nu = cs.dirac_comb(w);
        period = Lattice::int_sublattice(std::vector<std::int64_t>{a.modulus});
        j["input"]["modulus"] = a.modulus;
        j["input"]["window"] = w.str();
        if (radius == 0) radius = a.modulus;
    } else if (a.source == "fib") {
        const auto w = detail::parse_phi_window(a.window);
        ctx = GroupCtx::real_boxes(1);
        nu = FibonacciScheme().dirac_comb(w);
        j["input"]["window"] = w.str();
        if (radius == 0) radius = 4;
    } else if (a.source == "points") {
        std::ifstream in(a.points);
        if (!in) throw Error(ErrorCode::Parse, "cannot open '" + a.points + "'");
        auto [c, set] = read_gset(in);
        if (!c.discrete()) throw Error(ErrorCode::Unsupported, "point files must describe a discrete group");
        ctx = c;
        nu = PMeasure::counting(set.points(), "points from " + a.points);
        j["input"]["points"] = a.points;
        if (radius == 0) radius = 1;
    } else {
        throw Error(ErrorCode::Parse, "--source must be lattice, cyclic, fib or points");
    }
    if (a.n < 1) throw Error(ErrorCode::InvalidElement, "--n must be >= 1");
    const FolnerSeq seq = detail::default_sequence(*ctx);
    j["group"] = ctx->name();
    j["haar_normalization"] = ctx->haar_normalization();
    j["measure"] = nu->label();
    j["sequence"] = seq.name();
    j["period"] = period ? Json(period->describe()) : Json(nullptr);

    j["a_density"] = {{"value", detail::str(a_density(*ctx, *nu, seq, a.n))}, {"cert", to_string(Cert::Estimate)}};

    ShiftDomain dom;
    if (period) {
        dom = ShiftDomain::periodic(*period);
    } else if (ctx->discrete()) {
        dom = ShiftDomain::sample(default_patch(*ctx, 3).elements());
    } else {
        std::vector<RealPoint> xs;
        for (int k = 0; k < 64; ++k) xs.push_back(RealPoint{make_rational(k, 4)});
        dom = ShiftDomain::sample(std::move(xs));
    }
    const auto br = beurling_density(*ctx, *nu, seq, a.n, dom);
    j["beurling"] = detail::cert_pair(br.b_minus, br.minus_cert, br.b_plus, br.plus_cert);
    j["beurling"]["shifts"] = br.shifts;

    std::vector<GSet> ks, as;
    for (std::int64_t r = 0; r <= 2; ++r) ks.push_back(ctx->discrete() ? detail::centred_ball(*ctx, r) : detail::centred_ball(*ctx, r + 1));
    std::vector<std::int64_t> indices;
    for (std::int64_t m : {a.n / 4, a.n / 2, a.n})
        if (m >= 1 && (indices.empty() || indices.back() != m)) indices.push_back(m);
    for (auto m : indices) as.push_back(seq(m));
    const auto lp = leptin_probe(*ctx, *nu, ks, as, period);
    j["leptin"] = detail::cert_pair(lp.lep_minus, lp.minus_cert, lp.lep_plus, lp.plus_cert);
    j["leptin"]["raw_minus"] = detail::str(lp.raw_minus);
    j["leptin"]["raw_plus"] = detail::str(lp.raw_plus);

    const auto tb = tb_witness(*ctx, *nu, detail::centred_ball(*ctx, radius), dom);
    const auto [se_lo, se_hi] = standard_estimate_bounds(*ctx, tb);
    j["standard_estimates"] = {{"lower", detail::str(se_lo)},
                               {"upper", detail::str(se_hi)},
                               {"lower_cert", to_string(tb.lower_cert)},
                               {"upper_cert", to_string(tb.upper_cert)},
                               {"witness_radius", radius},
                               {"amenability_constant", kAmenabilityConstant},
                               {"note", tb.note}};

    bool ok = true;
    if (period) {
        // every certified value is exact here, so the chain and the sandwich must hold exactly
        const bool chain = br.b_minus <= lp.lep_minus && lp.lep_minus <= lp.lep_plus && lp.lep_plus <= br.b_plus;
        const bool sandwich = se_lo <= lp.lep_minus && lp.lep_plus <= se_hi;
        j["chain_holds"] = chain;
        j["sandwich_holds"] = sandwich;
        ok = chain && sandwich;
    }

    if (!a.gamma.empty()) {
        const Lattice gamma = detail::parse_lattice(*ctx, a.gamma);
        const auto g = gks_density(*ctx, *nu, gamma, {Rational(0), Rational(1, 10)}, ks, as, period);
        Json gj = detail::cert_pair(g.d_minus_lo, g.minus_cert, g.d_plus_hi, g.plus_cert);
        gj["gamma"] = gamma.describe();
        gj["lattice_leptin"] = detail::str(g.lattice_leptin);
        gj["product"] = detail::str(g.lattice_leptin * g.d_minus_lo);
        if (g.leptin_exact) {
            const bool identity = g.lattice_leptin * g.d_minus_lo == *g.leptin_exact &&
                                  g.lattice_leptin * g.d_plus_hi == *g.leptin_exact;
            gj["leptin_exact"] = detail::str(*g.leptin_exact);
            gj["identity_holds"] = identity;
            ok = ok && identity;
        }
        j["lattice_relative"] = gj;
    }
    if (!ok) throw VerificationFailure{j.dump(2)};
    return j;
}

struct VerifyArgs {
    std::string suite = "all";
    std::size_t cases = 100;
    std::uint64_t seed = 7;
    unsigned threads = 0;
};

inline Json suite_json(const verify::SuiteReport& r) {
    Json checks = Json::array();
    for (const auto& t : r.checks) checks.push_back({{"check", t.name}, {"passed", t.passed}, {"total", t.total}});
    Json j{{"suite", r.suite},   {"statement", r.statement}, {"seed", r.seed},
           {"cases", r.cases},   {"checks", checks},         {"failed_cases", r.failed_cases},
           {"passed", r.passed()}};
    j["first_failure"] = r.first_failing_case ? Json(r.first_failure) : Json(nullptr);
    return j;
}

inline Json verify_cmd(const VerifyArgs& a, std::ostream& err) {
    std::vector<std::string> names;
    if (a.suite == "all") names = verify::suite_names();
    else names.push_back(a.suite);
    const unsigned threads = a.threads ? a.threads : default_threads();
    Json j;
    j["command"] = "verify";
    j["input"] = {{"suite", a.suite}, {"cases", a.cases}, {"seed", a.seed}};
    Json suites = Json::array();
    bool ok = true;
    std::string first;
    for (const auto& name : names) {
        const auto r = verify::run_suite(name, a.cases, a.seed, threads);
        err << name << ": " << (r.passed() ? "pass" : "FAIL") << " runtime_s=" << r.runtime_s << "\n";
        if (!r.passed() && first.empty()) first = name + ": " + r.first_failure;
        ok = ok && r.passed();
        suites.push_back(suite_json(r));
    }
    j["suites"] = suites;
    j["passed"] = ok;
    if (!ok) throw VerificationFailure{j.dump(2) + "\nfirst failing case: " + first};
    return j;
}

// ---- entry point ----------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"delone: exact densities, boundaries, lattices and model sets"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "delone 1.0");

    GenModelsetArgs gm;
    auto* c_gen = app.add_subcommand("gen-modelset", "write a model-set patch in the point-set format");
    c_gen->add_option("--scheme", gm.scheme, "fib or cyclic")->capture_default_str();
    c_gen->add_option("--modulus", gm.modulus, "N for the cyclic scheme")->capture_default_str();
    c_gen->add_option("--window", gm.window, "fib: endpoint pairs 'lo hi ...'; cyclic: residues")->required()->allow_extra_args();
    c_gen->add_option("--range", gm.range, "region [lo, hi)")->expected(2);
    c_gen->add_option("--out", gm.out, "output file (default stdout)");

    DensityFormulaArgs df;
    auto* c_df = app.add_subcommand("density-formula", "empirical model-set density against m_H(W)/covol");
    c_df->add_option("--scheme", df.scheme, "fib or cyclic")->capture_default_str();
    c_df->add_option("--modulus", df.modulus)->capture_default_str();
    c_df->add_option("--window", df.window)->required()->allow_extra_args();
    c_df->add_option("--n", df.n, "Følner index")->capture_default_str();

    AlmostPeriodsArgs ap;
    auto* c_ap = app.add_subcommand("almost-periods", "find U with dens(Λ_{WU ∩ WᶜU}) ≤ ε and check sampled periods");
    c_ap->add_option("--scheme", ap.scheme)->capture_default_str();
    c_ap->add_option("--modulus", ap.modulus)->capture_default_str();
    c_ap->add_option("--window", ap.window)->required()->allow_extra_args();
    c_ap->add_option("--eps", ap.eps)->capture_default_str();
    c_ap->add_option("--range", ap.range)->expected(2);
    c_ap->add_option("--samples", ap.samples)->capture_default_str();
    c_ap->add_option("--seed", ap.seed)->capture_default_str();

    BoundaryArgs bd;
    auto* c_bd = app.add_subcommand("boundary", "Følner, strong Følner or van Hove boundary of A with respect to K");
    c_bd->add_option("--group", bd.group, "Z<d>, H3 or R<d>")->capture_default_str();
    c_bd->add_option("--kind", bd.kind, "folner, strong or vanhove")->capture_default_str();
    c_bd->add_option("--K", bd.k_file, "point-set file for K")->required();
    c_bd->add_option("--A", bd.a_file, "point-set file for A")->required();
    c_bd->add_option("--out", bd.out, "output file (default stdout)");
    c_bd->add_flag("--compare", bd.compare, "check the five boundary comparisons instead");

    FolnerRatioArgs fr;
    auto* c_fr = app.add_subcommand("folner-ratio", "CSV of boundary ratios m(∂A_n)/m(A_n)");
    c_fr->add_option("--family", fr.family, "comb, cubes-z, cubes-r or heisenberg")->capture_default_str();
    c_fr->add_option("--dim", fr.dim)->capture_default_str();
    c_fr->add_option("--eps", fr.eps, "comb width parameter")->capture_default_str();
    c_fr->add_option("--kind", fr.kind, "folner, strong or vanhove")->capture_default_str();
    c_fr->add_option("--K", fr.k_file, "point-set file for K (default: natural neighbourhood)");
    c_fr->add_option("--n", fr.ns, "indices")->delimiter(',');
    c_fr->add_flag("--thicken", fr.thicken, "use L A_n with L the unit ball");

    LatticeArgs la;
    auto* c_la = app.add_subcommand("lattice", "covolume, fundamental domain or density of a lattice");
    c_la->add_option("--group", la.group, "Z<d> or H3")->capture_default_str();
    c_la->add_option("--basis", la.basis, "row-major basis entries, or n for Gamma_n in H3")->required()->allow_extra_args();
    c_la->add_option("--op", la.op, "covol, fd or density")->capture_default_str();
    c_la->add_option("--n", la.n, "Følner index for --op density")->capture_default_str();
    c_la->add_option("--patch", la.patch, "patch radius for the tiling check")->capture_default_str();

    DensityArgs de;
    auto* c_de = app.add_subcommand("density", "density report with certification flags");
    c_de->add_option("--source", de.source, "lattice, cyclic, fib or points")->capture_default_str();
    c_de->add_option("--group", de.group)->capture_default_str();
    c_de->add_option("--basis", de.basis)->allow_extra_args();
    c_de->add_option("--modulus", de.modulus)->capture_default_str();
    c_de->add_option("--window", de.window)->allow_extra_args();
    c_de->add_option("--points", de.points);
    c_de->add_option("--gamma", de.gamma, "basis of Γ for lattice-relative densities")->allow_extra_args();
    c_de->add_option("--n", de.n, "Følner index")->capture_default_str();
    c_de->add_option("--witness-radius", de.witness_radius, "radius of the translation-boundedness ball (0: automatic)");

    VerifyArgs ve;
    auto* c_ve = app.add_subcommand("verify", "run a randomized verification suite");
    c_ve->add_option("--suite", ve.suite, "suite name or 'all'")->capture_default_str();
    c_ve->add_option("--cases", ve.cases)->capture_default_str();
    c_ve->add_option("--seed", ve.seed)->capture_default_str();
    c_ve->add_option("--threads", ve.threads, "worker threads (default: DELONE_THREADS or all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }

    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (*c_gen) gen_modelset(gm, out, err);
        else if (*c_df) out << density_formula(df).dump(2) << "\n";
        else if (*c_ap) out << almost_periods_cmd(ap).dump(2) << "\n";
        else if (*c_bd) boundary_cmd(bd, out);
        else if (*c_fr) folner_ratio_cmd(fr, out);
        else if (*c_la) lattice_cmd(la, out, err);
        else if (*c_de) out << density_cmd(de).dump(2) << "\n";
        else if (*c_ve) out << verify_cmd(ve, err).dump(2) << "\n";
    } catch (const VerificationFailure& f) {
        out << f.message << "\n";
        err << "verification failed\n";
        return kVerificationFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return detail::exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    err << "runtime_s=" << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << "\n";
    return kPass;
}

}  // namespace delone::cli
