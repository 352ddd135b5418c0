#include "cli.hpp"

#include <chrono>
#include <functional>
#include <numeric>
#include <optional>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmunits/cm_fields.hpp"
#include "cmunits/fricke_family.hpp"
#include "cmunits/galois.hpp"
#include "cmunits/invariants.hpp"
#include "cmunits/modular_functions.hpp"
#include "cmunits/polynomial.hpp"

namespace cmunits::cli
{

using json = nlohmann::ordered_json;

namespace
{

// Minimal polynomials of the d = -40, N = 4 test case, ascending.
std::vector<std::string> const quotient_reference{"1", "-72", "12", "72", "38", "72", "12", "-72", "1"};
std::vector<std::string> const siegel_reference{"16777216",
                                                "-32831816404527400323644148540243968",
                                                "15661918473435227713231818559848448",
                                                "-124937615343087944795342556102656",
                                                "541339076030741096821545656320",
                                                "-27035464691637377457360896",
                                                "-5775663114562606906112",
                                                "-181195540256817728",
                                                "1"};

struct Common
{
    long prec_bits = 192;
    long guard_bits = 24;
    std::optional<long> max_terms;
    bool timing = false;

    EvalConfig config() const
    {
        EvalConfig cfg{prec_bits, guard_bits, max_terms};
        cfg.validate();
        return cfg;
    }
};

Error bad(std::string const & what)
{
    return {ErrorCode::InvalidArgument, what};
}

json complex_json(BigComplex const & z)
{
    return {{"re", z.real().to_decimal()}, {"im", z.imag().to_decimal()}};
}

Real tolerance(EvalConfig const & cfg)
{
    // 2^-(P-24)
    Real t(1L, cfg.working_precision());
    mpfr_div_2si(t.get(), t.get(), cfg.precision_bits - 24, MPFR_RNDN);
    return t;
}

json check(std::string name, bool pass, std::string margin, std::string tol = "")
{
    json c{{"name", std::move(name)}, {"pass", pass}, {"margin", std::move(margin)}};
    if (!tol.empty())
        c["tolerance"] = std::move(tol);
    return c;
}

std::int64_t parse_int(std::string const & s)
{
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (std::exception const &) {
        throw bad("not an integer: '" + s + "'");
    }
    if (pos != s.size())
        throw bad("not an integer: '" + s + "'");
    return v;
}

// "p/q", "p" or a plain decimal such as "-0.25", read exactly.
Rational parse_rational(std::string const & s)
{
    if (s.empty())
        throw bad("empty number");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::int64_t den = parse_int(s.substr(slash + 1));
        if (den == 0)
            throw bad("zero denominator in '" + s + "'");
        return {parse_int(s.substr(0, slash)), den};
    }
    auto dot = s.find('.');
    if (dot == std::string::npos)
        return {parse_int(s)};
    std::string frac = s.substr(dot + 1);
    if (frac.size() > 15)
        throw bad("too many decimals in '" + s + "'");
    std::string whole = s.substr(0, dot);
    bool negative = !whole.empty() && whole[0] == '-';
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i)
        scale *= 10;
    std::int64_t ip = whole.empty() || whole == "-" || whole == "+" ? 0 : parse_int(whole);
    std::int64_t fp = frac.empty() ? 0 : parse_int(frac);
    Rational r(ip);
    Rational f(fp, scale);
    return negative ? r - f : r + f;
}

// "a+bi" with rational a, b; "i", "2i", "-1/2+3/2i" and "0.1+1.1i" all parse.
BigComplex parse_tau(std::string text, long prec)
{
    std::erase(text, ' ');
    if (text.empty())
        throw bad("empty tau");
    if (text.back() != 'i')
        return {Real(parse_rational(text), prec), Real(0L, prec)};
    text.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t i = text.size(); i-- > 1;) {
        if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    std::string re = split == std::string::npos ? "0" : text.substr(0, split);
    std::string im = split == std::string::npos ? text : text.substr(split);
    if (im.empty() || im == "+")
        im = "1";
    else if (im == "-")
        im = "-1";
    return {Real(parse_rational(re), prec), Real(parse_rational(im), prec)};
}

// "a/N,b/N"; a single component x means (x, 0).
IndexVector parse_vector(std::string const & text)
{
    std::vector<Rational> parts;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        parts.push_back(parse_rational(text.substr(start, comma - start)));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (parts.size() == 1)
        parts.emplace_back(0);
    if (parts.size() != 2)
        throw bad("vector needs two components: '" + text + "'");
    std::int64_t level = std::lcm(parts[0].denominator(), parts[1].denominator());
    Rational n(level);
    return {(parts[0] * n).numerator(), (parts[1] * n).numerator(), level};
}

json hypotheses_json(SmallExponentHypotheses const & h)
{
    return {{"level_even_at_least_4", h.level_even_at_least_4},
            {"discriminant_divisible_by_4", h.discriminant_divisible_by_4},
            {"discriminant_large", h.discriminant_large},
            {"all", h.all()}};
}

json polynomial_json(IntegerPolynomial const & p)
{
    json coeffs = json::array();
    for (auto const & c : p.coeffs)
        coeffs.push_back(c.get_str());
    return {{"display", p.to_string()},
            {"degree", p.degree()},
            {"coefficients_ascending", coeffs},
            {"residual", p.residual.to_decimal(6)},
            {"error_bound", p.error_bound.to_decimal(6)},
            {"monic", p.monic}};
}

json probe_json(IrreducibilityResult const & r)
{
    json patterns = json::array();
    for (auto const & pat : r.patterns)
        patterns.push_back({{"prime", pat.prime}, {"degrees", pat.degrees}});
    json out{{"verdict", std::string(to_string(r.verdict))}, {"certificate", r.certificate}, {"patterns", patterns}};
    if (r.root)
        out["integer_root"] = r.root->get_str();
    return out;
}

bool matches(IntegerPolynomial const & p, std::vector<std::string> const & reference)
{
    if (p.coeffs.size() != reference.size())
        return false;
    for (std::size_t i = 0; i < reference.size(); ++i)
        if (p.coeffs[i] != mpz_class(reference[i]))
            return false;
    return true;
}

ModularUnitExpr make_expression(std::string const & name, std::int64_t level)
{
    if (name == "quotient")
        return quotient_expression(level);
    if (name == "siegel12N")
        return siegel12n_expression(level);
    throw bad("unknown expression '" + name + "'");
}

struct Report
{
    json body;
    std::vector<json> checks;
    std::vector<std::string> warnings;
};

// ------------------------------------------------------------- commands

struct EvalArgs
{
    std::string function;
    std::string vector;
    std::string tau;
    std::optional<std::int64_t> disc;
    std::vector<std::int64_t> form;
};

void cmd_eval(EvalArgs const & a, EvalConfig const & cfg, Report & r)
{
    long prec = cfg.working_precision();
    json inputs{{"function", a.function}};
    std::optional<IndexVector> v;
    bool needs_vector = a.function == "siegel" || a.function == "wp" || a.function == "fricke";
    if (needs_vector) {
        if (a.vector.empty())
            throw bad(a.function + " needs --v");
        v = parse_vector(a.vector);
        inputs["v"] = v->to_string();
    }

    BigComplex tau(prec);
    int sources = (a.tau.empty() ? 0 : 1) + (a.disc ? 1 : 0) + (a.form.empty() ? 0 : 1);
    if (sources == 0)
        throw bad("give --tau, --disc or --form");
    if (!a.tau.empty() && sources > 1)
        throw bad("--tau excludes --disc and --form");
    if (!a.form.empty()) {
        if (a.form.size() != 3)
            throw bad("--form needs A,B,C");
        QuadForm q{a.form[0], a.form[1], a.form[2]};
        if (q.a <= 0 || q.discriminant() >= 0)
            throw bad("--form must be positive definite");
        if (a.disc && q.discriminant() != *a.disc)
            throw bad("form " + q.to_string() + " does not have discriminant " + std::to_string(*a.disc));
        inputs["form"] = q.to_string();
        tau = q.root(prec);
    } else if (a.disc) {
        inputs["disc"] = *a.disc;
        tau = field_from_discriminant(*a.disc, prec).tau_at(prec);
    } else {
        inputs["tau"] = a.tau;
        tau = parse_tau(a.tau, prec);
    }
    require_upper_half_plane(tau);

    BigComplex value(prec);
    if (a.function == "eta")
        value = dedekind_eta(tau, cfg);
    else if (a.function == "siegel")
        value = siegel(*v, tau, cfg);
    else if (a.function == "wp")
        value = wp(*v, tau, cfg);
    else if (a.function == "fricke")
        value = fricke(*v, tau, cfg);
    else if (a.function == "j")
        value = j_invariant(tau, cfg);
    else if (a.function == "delta")
        value = delta(tau, cfg);
    else
        throw bad("unknown function '" + a.function + "'");

    Real abs_q = nome(tau, cfg).abs();
    json outputs{{"tau", complex_json(tau)},
                 {"value", complex_json(value)},
                 {"abs_nome", abs_q.to_decimal(10)},
                 {"terms", series_truncation_length(abs_q, cfg)}};
    if (a.function == "siegel") {
        Rational ord = siegel_q_order(*v);
        outputs["q_order"] = std::to_string(ord.numerator()) + "/" + std::to_string(ord.denominator());
    }
    r.body["inputs"] = inputs;
    r.body["outputs"] = outputs;
}

struct InvariantArgs
{
    std::string kind;
    std::int64_t disc = 0;
    std::int64_t level = 0;
    std::vector<std::int64_t> cls{0, 1};
};

void cmd_invariant(InvariantArgs const & a, EvalConfig const & cfg, Report & r)
{
    QuadField k = field_from_discriminant(a.disc, cfg.working_precision());
    if (a.level < 2)
        throw bad("-N must be at least 2");
    if (a.cls.size() != 2)
        throw bad("--class needs s,t");
    json inputs{{"kind", a.kind}, {"disc", a.disc}, {"N", a.level}};
    json outputs;
    SmallExponentHypotheses hyp = small_exponent_hypotheses(a.disc, a.level);

    if (a.kind == "quotient") {
        InvariantReport rep = quotient_invariant(k, a.level, cfg);
        outputs["value"] = complex_json(rep.value);
        if (rep.class_matrix)
            outputs["class_matrix"] = rep.class_matrix->to_string();
        for (auto const & w : rep.warnings)
            r.warnings.push_back(w);
    } else if (a.kind == "fricke" || a.kind == "siegel12N") {
        inputs["class"] = {{"s", a.cls[0]}, {"t", a.cls[1]}};
        GLMatrix alpha = element_to_matrix(k, a.cls[0], a.cls[1], a.level);
        BigComplex value = a.kind == "fricke" ? fricke_invariant(k, a.level, alpha, cfg)
                                              : siegel_ramachandra(k, a.level, alpha, cfg);
        outputs["value"] = complex_json(value);
        outputs["class_matrix"] = alpha.to_string();
        outputs["vector"] = transpose_apply(alpha, IndexVector(0, 1, a.level)).to_string();
    } else {
        throw bad("unknown invariant kind '" + a.kind + "'");
    }
    outputs["hypotheses"] = hypotheses_json(hyp);
    r.body["inputs"] = inputs;
    r.body["outputs"] = outputs;
}

struct MinpolyArgs
{
    std::int64_t disc = 0;
    std::int64_t level = 0;
    std::string expr = "quotient";
    std::string over = "K";
};

void cmd_minpoly(MinpolyArgs const & a, EvalConfig const & cfg, Report & r)
{
    QuadField k = field_from_discriminant(a.disc, cfg.working_precision());
    ModularUnitExpr e = make_expression(a.expr, a.level);
    r.body["inputs"] = {{"disc", a.disc}, {"N", a.level}, {"expr", a.expr}, {"over", a.over}};

    std::vector<Conjugate> conj;
    if (a.over == "K")
        conj = conjugates_over_k(e, k, cfg);
    else if (a.over == "HK")
        conj = conjugates_over_hk(e, k, cfg);
    else
        throw bad("--over must be K or HK");

    json list = json::array();
    for (auto const & c : conj) {
        json item{{"alpha", c.alpha.to_string()}, {"expr", c.expr.to_string()}, {"value", complex_json(c.value)}};
        if (c.form)
            item["form"] = c.form->to_string();
        list.push_back(item);
    }
    json outputs{{"expression", e.to_string()}, {"conjugates", list}};

    if (a.over == "HK") {
        // Coefficients lie in H_K; integers only when they round tightly.
        json coeffs = json::array();
        Real worst(0L, cfg.working_precision());
        for (auto const & c : expand_product(conjugate_values(conj))) {
            coeffs.push_back(complex_json(c));
            Real dist = max(abs(c.real() - Real(c.real().round_to_integer(), c.precision())), abs(c.imag()));
            worst = max(worst, dist);
        }
        outputs["coefficients_ascending"] = coeffs;
        outputs["integral"] = worst < tolerance(cfg);
        outputs["integrality_residual"] = worst.to_decimal(6);
        r.body["outputs"] = outputs;
        return;
    }

    OrbitPolynomial op = orbit_polynomial(conjugate_values(conj));
    outputs["orbit_size"] = op.orbit_size;
    outputs["distinct"] = op.distinct;
    outputs["multiplicity"] = op.multiplicity;
    outputs["polynomial"] = polynomial_json(op.polynomial);
    outputs["unit"] = unit_check(op.polynomial);
    outputs["irreducibility"] = probe_json(irreducibility_probe(op.polynomial));
    r.body["outputs"] = outputs;
    r.checks.push_back(check("rounding", true, op.polynomial.residual.to_decimal(6), "0.25"));
}

struct VerifyArgs
{
    std::string suite;
    std::vector<std::int64_t> discs;
    std::vector<std::int64_t> levels;
    std::string tau;
    int count = 10;
    std::uint64_t seed = 1;
};

void verify_bounds(VerifyArgs const & a, EvalConfig const & cfg, Report & r)
{
    std::vector<std::int64_t> discs = a.discs.empty() ? std::vector<std::int64_t>{-40} : a.discs;
    std::vector<std::int64_t> levels = a.levels.empty() ? std::vector<std::int64_t>{4} : a.levels;
    json results = json::array();
    for (auto d : discs) {
        QuadField k = field_from_discriminant(d, cfg.working_precision());
        for (auto n : levels) {
            MagnitudeReport m = check_magnitude_bounds(k, n, cfg);
            std::string tag = "(" + std::to_string(d) + "," + std::to_string(n) + ")";
            if (!m.hypotheses.all())
                r.warnings.push_back(to_string(ErrorCode::HypothesisViolation).data() + (": " + tag)
                                     + " lies outside the range of the bounds");
            json entries = json::array();
            for (auto const & e : m.entries)
                entries.push_back({{"v", e.vector.to_string()}, {"log_abs", e.log_abs.to_decimal(20)}});
            results.push_back({{"disc", d},
                               {"N", n},
                               {"hypotheses", hypotheses_json(m.hypotheses)},
                               {"minimizer", m.minimizer.to_string()},
                               {"maximizer", m.maximizer.to_string()},
                               {"entries", entries}});
            r.checks.push_back(check("lower_bound" + tag, m.lower_bound_holds, m.margin_lower.to_decimal(20)));
            r.checks.push_back(check("upper_bound" + tag, m.upper_bound_holds, m.margin_upper.to_decimal(20)));
        }
    }
    r.body["outputs"] = {{"results", results}};
}

void verify_dn(VerifyArgs const & a, EvalConfig const & cfg, Report & r)
{
    std::vector<std::int64_t> discs = a.discs.empty() ? std::vector<std::int64_t>{-40} : a.discs;
    std::vector<std::int64_t> levels = a.levels.empty() ? std::vector<std::int64_t>{2, 3, 4, 5} : a.levels;
    Real threshold(std::string("1e-30"), cfg.working_precision());
    json results = json::array();
    for (auto d : discs) {
        QuadField k = field_from_discriminant(d, cfg.working_precision());
        for (auto n : levels) {
            BigComplex value = eval_dn(k, n, cfg);
            CorollaryBound cb = corollary_bound(k, n);
            Real size = value.abs();
            std::string tag = "(" + std::to_string(d) + "," + std::to_string(n) + ")";
            results.push_back({{"disc", d},
                               {"N", n},
                               {"value", complex_json(value)},
                               {"abs", size.to_decimal(20)},
                               {"ell", cb.ell},
                               {"class_number", cb.class_number},
                               {"corollary_bound", cb.bound},
                               {"corollary_satisfied", cb.satisfied}});
            r.checks.push_back(check("nonzero" + tag, size > threshold, size.to_decimal(20), "1e-30"));
        }
    }
    r.body["outputs"] = {{"results", results}};
}

void verify_axioms(VerifyArgs const & a, EvalConfig const & cfg, Report & r)
{
    std::int64_t n = a.levels.empty() ? 4 : a.levels.front();
    long prec = cfg.working_precision();
    Real tol = tolerance(cfg);
    std::mt19937_64 rng(a.seed);
    auto uniform = [&](std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    auto classes = enumerate_vn_classes(n);

    auto h = [&](FamilyKind kind, IndexVector const & v, BigComplex const & t) {
        return kind == FamilyKind::fricke ? fricke(v, t, cfg) : pow(siegel(v, t, cfg), 12 * n);
    };

    Real worst_f1(0L, prec), worst_f2(0L, prec), worst_f3(0L, prec);
    for (int i = 0; i < a.count; ++i) {
        BigComplex tau = a.tau.empty() ? BigComplex(Real(Rational(uniform(-50, 50), 100), prec),
                                                    Real(Rational(uniform(80, 200), 100), prec))
                                       : parse_tau(a.tau, prec);
        require_upper_half_plane(tau);
        IndexVector v = classes[uniform(0, static_cast<std::int64_t>(classes.size()) - 1)].vector();
        std::optional<GLMatrix> gamma;
        while (!gamma) {
            std::int64_t x = uniform(0, n - 1), y = uniform(0, n - 1), z = uniform(0, n - 1), w = uniform(0, n - 1);
            if (floor_mod(x * w - y * z, n) == 1 % n)
                gamma = GLMatrix(x, y, z, w, n);
        }
        for (auto kind : {FamilyKind::fricke, FamilyKind::siegel12n}) {
            // (F1) invariance under the generators of Gamma(N)
            BigComplex base = h(kind, v, tau);
            for (IntMatrix m : {IntMatrix{1, n, 0, 1}, IntMatrix{1, 0, n, 1}})
                worst_f1 = max(worst_f1, relative_error(h(kind, v, moebius(m, tau)), base));
            // (F2) dependence on +-v only
            worst_f2 = max(worst_f2, relative_error(h(kind, v.negated(), tau), base));
            // (F3) restricted to SL2
            worst_f3 = max(worst_f3, sl2_compatibility_test(*gamma, v, tau, kind, cfg));
        }
    }
    std::string t = tol.to_decimal(6);
    r.checks.push_back(check("F1_level_N", worst_f1 < tol, worst_f1.to_decimal(6), t));
    r.checks.push_back(check("F2_sign", worst_f2 < tol, worst_f2.to_decimal(6), t));
    r.checks.push_back(check("F3_sl2", worst_f3 < tol, worst_f3.to_decimal(6), t));
    r.body["outputs"] = {{"N", n}, {"cases", a.count}, {"families", {"fricke", "siegel12N"}}};
}

void verify_example(EvalConfig const & cfg, Report & r)
{
    QuadField k = field_from_discriminant(-40, cfg.working_precision());
    auto conj = conjugates_over_k(quotient_expression(4), k, cfg);
    OrbitPolynomial quotient = orbit_polynomial(conjugate_values(conj));

    EvalConfig wide = cfg;
    wide.precision_bits = std::max<long>(cfg.precision_bits, 320);
    QuadField kw = field_from_discriminant(-40, wide.working_precision());
    OrbitPolynomial giant = orbit_polynomial(conjugate_values(conjugates_over_k(siegel12n_expression(4), kw, wide)));

    Real imag = abs(quotient_invariant(k, 4, cfg).value.imag());
    IrreducibilityResult probe = irreducibility_probe(quotient.polynomial);

    r.body["outputs"] = {{"quotient_polynomial", polynomial_json(quotient.polynomial)},
                         {"siegel_polynomial", polynomial_json(giant.polynomial)},
                         {"siegel_precision_bits", wide.precision_bits},
                         {"irreducibility", probe_json(probe)}};
    r.checks.push_back(check("conjugate_count", conj.size() == 8, std::to_string(conj.size())));
    r.checks.push_back(check("quotient_real", imag < tolerance(cfg), imag.to_decimal(6)));
    r.checks.push_back(check("quotient_polynomial", matches(quotient.polynomial, quotient_reference),
                             quotient.polynomial.residual.to_decimal(6)));
    r.checks.push_back(check("quotient_unit", unit_check(quotient.polynomial), quotient.polynomial.constant().get_str()));
    r.checks.push_back(check("siegel_polynomial", matches(giant.polynomial, siegel_reference),
                             giant.polynomial.residual.to_decimal(6)));
    r.checks.push_back(check("siegel_constant_2^24", giant.polynomial.constant() == mpz_class(1) << 24,
                             giant.polynomial.constant().get_str()));
    r.checks.push_back(check("irreducibility_not_contradicted", probe.verdict != Irreducibility::reducible,
                             std::string(to_string(probe.verdict))));
}

void cmd_verify(VerifyArgs const & a, EvalConfig const & cfg, Report & r)
{
    json inputs{{"suite", a.suite}};
    if (!a.discs.empty())
        inputs["disc"] = a.discs;
    if (!a.levels.empty())
        inputs["N"] = a.levels;
    if (a.suite == "axioms") {
        inputs["count"] = a.count;
        inputs["seed"] = a.seed;
        if (!a.tau.empty())
            inputs["tau"] = a.tau;
    }
    r.body["inputs"] = inputs;
    if (a.suite == "bounds")
        verify_bounds(a, cfg, r);
    else if (a.suite == "dN")
        verify_dn(a, cfg, r);
    else if (a.suite == "axioms")
        verify_axioms(a, cfg, r);
    else if (a.suite == "example")
        verify_example(cfg, r);
    else
        throw bad("unknown suite '" + a.suite + "'");
}

} // namespace

int exit_status(ErrorCode code)
{
    return error_base + static_cast<int>(code);
}

int run(std::vector<std::string> const & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Evaluate modular units at CM points and recognize their minimal polynomials"};
    app.name("cmunits");
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    app.add_option("--prec-bits", common.prec_bits, "target precision in bits")->capture_default_str();
    app.add_option("--guard-bits", common.guard_bits, "extra working bits")->capture_default_str();
    app.add_option("--max-terms", common.max_terms, "cap on q-series length (default: automatic)");
    app.add_flag("--timing", common.timing, "add wall-clock timing to the report");

    EvalArgs ea;
    auto * eval = app.add_subcommand("eval", "evaluate eta, siegel, wp, fricke, j or delta");
    eval->add_option("function", ea.function, "eta|siegel|wp|fricke|j|delta")->required();
    eval->add_option("--v", ea.vector, "index vector a/N,b/N");
    eval->add_option("--tau", ea.tau, "point a+bi with rational a, b");
    eval->add_option("--disc", ea.disc, "use tau_K of this fundamental discriminant");
    eval->add_option("--form", ea.form, "use the root of the form A,B,C")->delimiter(',');

    InvariantArgs ia;
    auto * inv = app.add_subcommand("invariant", "class invariants of N O_K");
    inv->add_option("kind", ia.kind, "fricke|siegel12N|quotient")->required();
    inv->add_option("--disc", ia.disc, "fundamental discriminant")->required();
    inv->add_option("-N,--level", ia.level, "level N")->required();
    inv->add_option("--class", ia.cls, "ray class of s tau_K + t, as s,t")->delimiter(',');

    MinpolyArgs ma;
    auto * mp = app.add_subcommand("minpoly", "minimal polynomial from the conjugates");
    mp->add_option("--disc", ma.disc, "fundamental discriminant")->required();
    mp->add_option("-N,--level", ma.level, "level N")->required();
    mp->add_option("--expr", ma.expr, "quotient|siegel12N")->capture_default_str();
    mp->add_option("--over", ma.over, "K|HK")->capture_default_str();

    VerifyArgs va;
    auto * vf = app.add_subcommand("verify", "run a verification suite");
    vf->add_option("suite", va.suite, "bounds|dN|axioms|example")->required();
    vf->add_option("--disc", va.discs, "discriminants")->delimiter(',');
    vf->add_option("-N,--level", va.levels, "levels")->delimiter(',');
    vf->add_option("--tau", va.tau, "fixed point for the axioms suite");
    vf->add_option("--count", va.count, "random cases for the axioms suite")->capture_default_str();
    vf->add_option("--seed", va.seed, "seed for the axioms suite")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (CLI::CallForHelp const &) {
        out << app.help();
        return exit_ok;
    } catch (CLI::CallForAllHelp const &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (CLI::ParseError const & e) {
        err << "cmunits: " << e.what() << "\n";
        return exit_usage;
    }

    CLI::App * sub = app.get_subcommands().front();
    Report r;
    r.body["command"] = sub->get_name();
    auto start = std::chrono::steady_clock::now();
    int status = exit_ok;
    try {
        EvalConfig cfg = common.config();
        r.body["precision"] = {{"bits", cfg.precision_bits},
                               {"guard_bits", cfg.guard_bits},
                               {"working_bits", cfg.working_precision()},
                               {"max_terms", cfg.max_terms ? json(*cfg.max_terms) : json("auto")}};
        if (sub == eval)
            cmd_eval(ea, cfg, r);
        else if (sub == inv)
            cmd_invariant(ia, cfg, r);
        else if (sub == mp)
            cmd_minpoly(ma, cfg, r);
        else
            cmd_verify(va, cfg, r);
        bool all = std::all_of(r.checks.begin(), r.checks.end(), [](json const & c) { return c["pass"].get<bool>(); });
        status = all ? exit_ok : exit_checks_failed;
        r.body["status"] = all ? "ok" : "checks_failed";
    } catch (Error const & e) {
        status = exit_status(e.code());
        r.body["status"] = "error";
        std::string hint;
        if (e.code() == ErrorCode::RoundingFailure)
            hint = "increase --prec-bits";
        r.body["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
        if (!hint.empty())
            r.body["error"]["hint"] = hint;
        err << "cmunits: " << e.what() << (hint.empty() ? "" : " (" + hint + ")") << "\n";
    }
    r.body["checks"] = r.checks;
    r.body["warnings"] = r.warnings;
    for (auto const & w : r.warnings)
        err << "cmunits: warning: " << w << "\n";
    if (common.timing) {
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        r.body["timing_ms"] = ms;
    }
    out << r.body.dump(2) << "\n";
    return status;
}

} // namespace cmunits::cli
