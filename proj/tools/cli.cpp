#include "cli.hpp"

#include <bit>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tdcodes/bounds.hpp"
#include "tdcodes/distance.hpp"
#include "tdcodes/error.hpp"
#include "tdcodes/json_io.hpp"
#include "tdcodes/numtheory.hpp"

namespace tdcodes::cli {
namespace {

// Matrix-level checks (Gram matrices, hull dimension) run up to this length.
constexpr std::uint64_t kMatrixLimit = 1023;
constexpr std::uint64_t kLcdMatrixLimit = 255;
// bch_search and distance sampling in `table` and `distance` stay below this.
constexpr std::uint64_t kSearchLimit = 4095;

struct Options {
    std::optional<std::uint64_t> q;
    std::optional<unsigned> m;
    int parity = 0;
    std::string variant = "plain";
    std::string id;
    std::string format = "json";
    bool pretty = false;
    std::uint64_t seed = 1;
    std::uint64_t cap = 1ULL << 24;
    std::string field_spec;
    std::string out;
    int section = 16;
    std::uint64_t trials = 512;
    std::uint64_t table_trials = 0;
    unsigned info_weight = 2;
    std::uint64_t budget = 1ULL << 30;
    unsigned threads = 0;
    std::string distance_method = "auto";
    std::string bound_method = "lemma";
    std::string lemma;
};

std::uint64_t max_n() {
    if (const char* v = std::getenv("TD_MAX_N")) {
        char* end = nullptr;
        const unsigned long long x = std::strtoull(v, &end, 10);
        if (end == v || *end != '\0' || x == 0) throw ParameterError("TD_MAX_N must be a positive integer");
        return x;
    }
    return 1ULL << 20;
}

// Validated (q, m, n), plus the field once one is needed.
class Context {
public:
    explicit Context(const Options& o) {
        if (!o.field_spec.empty()) {
            spec_ = read_field_spec(o.field_spec);
            if (spec_->s < 1 || spec_->s > 8) throw FieldError("field spec: s must be in 1..8");
            q_ = std::uint64_t{1} << spec_->s;
            m_ = spec_->m;
            if (o.q && *o.q != q_) throw ParameterError("--q disagrees with the field spec");
            if (o.m && *o.m != m_) throw ParameterError("--m disagrees with the field spec");
        } else {
            if (!o.q || !o.m) throw ParameterError("--q and --m are required");
            q_ = *o.q;
            m_ = *o.m;
        }
        if (q_ < 2 || q_ > 256 || !std::has_single_bit(q_)) throw ParameterError("q must be 2^s with 1 <= s <= 8");
        if (m_ < 2) throw ParameterError("m must be at least 2");
        const unsigned s = static_cast<unsigned>(std::countr_zero(q_));
        if (static_cast<std::uint64_t>(s) * m_ > 40) throw ParameterError("q^m is too large");
        n_ = nt::checked_pow(q_, m_) - 1;
        if (n_ > max_n()) throw ParameterError("n = " + std::to_string(n_) + " exceeds TD_MAX_N");
        s_ = s;
    }

    std::uint64_t q() const { return q_; }
    unsigned m() const { return m_; }
    std::uint64_t n() const { return n_; }

    const std::shared_ptr<const FieldTower>& field() {
        if (!field_) field_ = spec_ ? make_field(*spec_) : make_field(s_, m_);
        return field_;
    }

private:
    std::optional<FieldSpec> spec_;
    std::uint64_t q_ = 0;
    unsigned m_ = 0;
    unsigned s_ = 0;
    std::uint64_t n_ = 0;
    std::shared_ptr<const FieldTower> field_;
};

Parity parity_of(const Options& o) {
    if (o.parity != 0 && o.parity != 1) throw ParameterError("--parity must be 0 or 1");
    return o.parity == 0 ? Parity::Even : Parity::Odd;
}

bool pretty(const Options& o) { return o.pretty || o.format == "pretty"; }

std::string code_name(std::uint64_t q, unsigned m, Parity p) {
    return "C_(" + std::to_string(q) + "," + std::to_string(m) + ";" + std::to_string(parity_index(p)) + ")";
}

std::string params(std::uint64_t n, std::uint64_t k) {
    return "[" + std::to_string(n) + ", " + std::to_string(k) + "]";
}

void emit(const Options& o, std::ostream& out, const Json& j, const std::string& text) {
    const std::string body = pretty(o) ? text : j.dump(2) + "\n";
    if (o.out.empty()) {
        out << body;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw ParameterError("cannot write " + o.out);
    f << body;
}

// ---------------------------------------------------------------- variants

struct Variant {
    CyclicCode base;
    std::optional<CyclicCode> code;  // empty for the extended variant
    std::string name;
};

Variant make_variant(Context& ctx, Parity p, const std::string& variant) {
    CyclicCode base = base_code(ctx.field(), p);
    if (variant == "plain") return {base, base, variant};
    if (variant == "even_like") return {base, even_like(base), variant};
    if (variant == "dual") return {base, dual_code(base), variant};
    if (variant == "complement") return {base, complement_code(base), variant};
    if (variant == "extended") return {base, std::nullopt, variant};
    throw ParameterError("unknown variant " + variant);
}

std::uint64_t variant_length(const Variant& v) { return v.base.n() + (v.code ? 0 : 1); }
std::uint64_t variant_dimension(const Variant& v) {
    return v.code ? v.code->dimension() : v.base.dimension();
}

GfMatrix variant_matrix(const Variant& v) {
    return v.code ? generator_matrix(*v.code) : extend_code(v.base);
}

// -------------------------------------------------------------- construct

int cmd_construct(const Options& o, std::ostream& out, std::ostream& err) {
    Context ctx(o);
    if (ctx.q() == 2) err << "warning: q = 2 is outside the range covered by the distance bounds\n";
    const Parity p = parity_of(o);
    const Variant v = make_variant(ctx, p, o.variant);
    const BaseField& f = ctx.field()->base();
    std::ostringstream text;
    text << code_name(ctx.q(), ctx.m(), p);
    Json j;
    if (v.code) {
        j = code_to_json(*v.code, p, o.variant);
        if (o.variant != "plain") text << " " << o.variant;
        text << " " << params(v.code->n(), v.code->dimension()) << "\n";
        text << "g(x) = " << render(f, v.code->generator()) << "\n";
    } else {
        j = code_to_json(v.base, p, "extended");
        j["length"] = v.base.n() + 1;
        Json self_dual = nullptr;
        if (v.base.n() <= kMatrixLimit) self_dual = is_self_dual(f, extend_code(v.base));
        j["self_dual"] = self_dual;
        text << " extended " << params(v.base.n() + 1, v.base.dimension()) << "\n";
        text << "rows: x^j g(x) with an overall-sum coordinate appended, j = 0.."
             << v.base.dimension() - 1 << "\n";
        text << "g(x) = " << render(f, v.base.generator()) << "\n";
        text << "self-dual: " << (self_dual.is_null() ? "not checked" : self_dual.get<bool>() ? "yes" : "no")
             << "\n";
    }
    emit(o, out, j, text.str());
    return kOk;
}

// ---------------------------------------------------------------- inspect

int cmd_inspect(const Options& o, std::ostream& out, std::ostream&) {
    Context ctx(o);
    const Parity p = parity_of(o);
    const Variant v = make_variant(ctx, p, o.variant);
    const CyclicCode& c = v.code ? *v.code : v.base;
    const CosetPartition part(ctx.q(), ctx.n());
    std::size_t cosets = 0;
    for (std::uint32_t l : part.leaders())
        if (c.defining_set().contains(l)) ++cosets;

    Json j;
    j["code"] = code_name(ctx.q(), ctx.m(), p);
    j["variant"] = o.variant;
    j["length"] = variant_length(v);
    j["k"] = variant_dimension(v);
    j["defining_set_size"] = c.defining_set().size();
    j["cosets_in_defining_set"] = cosets;
    j["lcd"] = v.code ? Json(is_lcd(*v.code)) : Json(nullptr);
    Json self_orth = nullptr, hull = nullptr;
    if (ctx.n() <= kMatrixLimit) {
        const GfMatrix g = variant_matrix(v);
        self_orth = is_self_orthogonal(ctx.field()->base(), g);
        if (ctx.n() <= kLcdMatrixLimit) hull = hull_dimension(ctx.field()->base(), g);
    }
    j["self_orthogonal"] = self_orth;
    j["hull_dimension"] = hull;
    j["theorem_bound"] = ctx.q() >= 4 && (o.variant == "plain" || o.variant == "even_like" ||
                                          o.variant == "extended")
                             ? Json(theorem_bound(ctx.q(), ctx.m(), p))
                             : Json(nullptr);

    std::ostringstream text;
    text << j["code"].get<std::string>() << (o.variant == "plain" ? "" : " " + o.variant) << " "
         << params(variant_length(v), variant_dimension(v)) << "\n";
    text << "|T| = " << c.defining_set().size() << " in " << cosets << " cyclotomic cosets\n";
    auto show = [](const Json& x) {
        if (x.is_null()) return std::string("not checked");
        if (x.is_boolean()) return std::string(x.get<bool>() ? "yes" : "no");
        return x.dump();
    };
    text << "LCD: " << show(j["lcd"]) << "\n";
    text << "self-orthogonal: " << show(self_orth) << "\n";
    text << "hull dimension: " << show(hull) << "\n";
    text << "closed-form bound: " << show(j["theorem_bound"]) << "\n";
    emit(o, out, j, text.str());
    return kOk;
}

// ----------------------------------------------------------------- verify

struct Check {
    std::string name;
    std::string status;  // pass, fail, skipped, inconclusive
    std::string detail;
};

class Report {
public:
    void add(std::string name, bool ok, std::string detail = {}) {
        checks_.push_back({std::move(name), ok ? "pass" : "fail", std::move(detail)});
    }
    void skip(std::string name, std::string detail) {
        checks_.push_back({std::move(name), "skipped", std::move(detail)});
    }
    void inconclusive(std::string name, std::string detail) {
        checks_.push_back({std::move(name), "inconclusive", std::move(detail)});
    }
    bool passed() const {
        return std::none_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == "fail"; });
    }
    const std::vector<Check>& checks() const { return checks_; }

private:
    std::vector<Check> checks_;
};

std::string eq_detail(std::uint64_t got, std::uint64_t want) {
    return std::to_string(got) + (got == want ? " == " : " != ") + std::to_string(want);
}

void require_odd_m(const Context& ctx, const std::string& id) {
    if (ctx.m() % 2 == 0 || ctx.m() < 3) throw ParameterError(id + " requires odd m >= 3");
}
void require_even_m(const Context& ctx, const std::string& id) {
    if (ctx.m() % 2 == 1) throw ParameterError(id + " requires even m");
}
void require_q4(const Context& ctx, const std::string& id) {
    if (ctx.q() < 4) throw ParameterError(id + " requires q >= 4");
}

void check_lemma1(Context& ctx, Report& r) {
    const std::uint64_t n = ctx.n();
    const DefiningSet t0 = build_T(ctx.q(), ctx.m(), Parity::Even);
    const DefiningSet t1 = build_T(ctx.q(), ctx.m(), Parity::Odd);
    if (ctx.m() % 2 == 1) {
        r.add("|T_0| = (n-1)/2", t0.size() == (n - 1) / 2, eq_detail(t0.size(), (n - 1) / 2));
        r.add("|T_1| = (n-1)/2", t1.size() == (n - 1) / 2, eq_detail(t1.size(), (n - 1) / 2));
        r.add("-T_0 = T_1", negate_set(t0) == t1);
    } else {
        r.add("|T_0| = (n-3)/2", t0.size() == (n - 3) / 2, eq_detail(t0.size(), (n - 3) / 2));
        r.add("|T_1| = (n+1)/2", t1.size() == (n + 1) / 2, eq_detail(t1.size(), (n + 1) / 2));
        r.add("-T_0 = T_0", negate_set(t0) == t0);
        r.add("-T_1 = T_1", negate_set(t1) == t1);
    }
    bool partition = !t0.contains(0) && !t1.contains(0);
    for (std::uint64_t i = 1; i < n && partition; ++i) partition = t0.contains(i) != t1.contains(i);
    r.add("T_0, T_1, {0} partition Z_n", partition);
}

void check_thm2(Context& ctx, Report& r) {
    const std::uint64_t n = ctx.n();
    const CyclicCode c0 = base_code(ctx.field(), Parity::Even);
    const CyclicCode c1 = base_code(ctx.field(), Parity::Odd);
    const BaseField& f = ctx.field()->base();
    const SplittingCheck sc = splitting_check(c0.defining_set(), c1.defining_set(), static_cast<std::int64_t>(n - 1));
    r.add("-1 splits T_0 and T_1", sc.holds, sc.reason);
    r.add("dim C_0 = (n+1)/2", c0.dimension() == (n + 1) / 2, eq_detail(c0.dimension(), (n + 1) / 2));
    r.add("dim C_1 = (n+1)/2", c1.dimension() == (n + 1) / 2, eq_detail(c1.dimension(), (n + 1) / 2));
    for (const CyclicCode* c : {&c0, &c1}) {
        const std::string tag = c == &c0 ? "0" : "1";
        const CyclicCode el = even_like(*c);
        // A cyclic code is self-orthogonal iff its dual's defining set lies inside its own.
        const DefiningSet perp = dual_defining_set(el.defining_set());
        bool contained = true;
        for (std::uint32_t x : perp.elems()) contained = contained && el.defining_set().contains(x);
        r.add("even-like C_" + tag + " self-orthogonal (defining sets)", contained);
        r.add("dim even-like C_" + tag + " = (n-1)/2", el.dimension() == (n - 1) / 2,
              eq_detail(el.dimension(), (n - 1) / 2));
        if (n <= kMatrixLimit) {
            r.add("even-like C_" + tag + " self-orthogonal (G G^T = 0)",
                  is_self_orthogonal(f, generator_matrix(el)));
            const GfMatrix ext = extend_code(*c);
            r.add("extended C_" + tag + " self-dual (G G^T = 0, 2k = n+1)", is_self_dual(f, ext),
                  params(ext.cols(), rank(f, ext)));
        } else {
            r.skip("extended C_" + tag + " self-dual", "n above the matrix-check limit");
        }
        const CyclicCode d = dual_code(*c);
        const CyclicCode other_el = even_like(c == &c0 ? c1 : c0);
        r.add("dual C_" + tag + " and even-like C_" + (c == &c0 ? "1" : "0") + " share (n, k)",
              d.n() == other_el.n() && d.dimension() == other_el.dimension(),
              params(d.n(), d.dimension()) + " vs " + params(other_el.n(), other_el.dimension()));
        r.add("complement C_" + tag + " = even-like C_" + (c == &c0 ? "1" : "0"), complement_code(*c) == other_el);
    }
}

void check_thm3(Context& ctx, Report& r) {
    const std::uint64_t n = ctx.n();
    const CyclicCode c0 = base_code(ctx.field(), Parity::Even);
    const CyclicCode c1 = base_code(ctx.field(), Parity::Odd);
    const BaseField& f = ctx.field()->base();
    r.add("dual C_0 = even-like C_1", dual_code(c0) == even_like(c1));
    r.add("dual C_1 = even-like C_0", dual_code(c1) == even_like(c0));
    r.add("C_0 is LCD", is_lcd(c0));
    r.add("C_1 is LCD", is_lcd(c1));
    r.add("dim C_0 = (n+3)/2", c0.dimension() == (n + 3) / 2, eq_detail(c0.dimension(), (n + 3) / 2));
    r.add("dim C_1 = (n-1)/2", c1.dimension() == (n - 1) / 2, eq_detail(c1.dimension(), (n - 1) / 2));
    if (n <= kLcdMatrixLimit) {
        r.add("hull of C_0 is trivial", hull_dimension(f, generator_matrix(c0)) == 0);
        r.add("hull of C_1 is trivial", hull_dimension(f, generator_matrix(c1)) == 0);
    } else {
        r.skip("hull dimension", "n above the matrix-check limit");
    }
}

void check_bound(Context& ctx, Report& r, Parity p) {
    const BoundReport b = lemma_bound(ctx.q(), ctx.m(), p);
    const DefiningSet T = build_T(ctx.q(), ctx.m(), p);
    const std::string tag = code_name(ctx.q(), ctx.m(), p);
    r.add(b.source + " progression lies in T_" + std::to_string(parity_index(p)), ap_in_set(T, *b.witness),
          witness_to_json(*b.witness).dump());
    const std::uint64_t want = theorem_bound(ctx.q(), ctx.m(), p);
    r.add("BCH bound for " + tag + " reaches " + std::to_string(want), b.delta >= want, eq_detail(b.delta, want));
}

void check_thm8(Context& ctx, const Options& o, Report& r) {
    check_bound(ctx, r, Parity::Even);
    check_bound(ctx, r, Parity::Odd);
    const CyclicCode c0 = base_code(ctx.field(), Parity::Even);
    const CyclicCode c1 = base_code(ctx.field(), Parity::Odd);
    // x -> x^(-1) carries every row x^j g_0(x) into C_1, hence all of C_0.
    const GfMatrix g0 = generator_matrix(c0);
    std::vector<std::vector<Symbol>> rows;
    for (std::size_t i = 0; i < g0.rows(); ++i) rows.emplace_back(g0.row(i).begin(), g0.row(i).end());
    r.add("x -> x^-1 maps C_0 into C_1", multiplier_maps(c0, c1, -1, rows));
    if (ctx.n() > kSearchLimit) {
        r.skip("distance equality", "n above the sampling limit");
        return;
    }
    const DuadicDistanceCheck dc = verify_duadic_distance_equality(
        ctx.field(), {.cap = o.cap, .threads = o.threads},
        {.trials = o.trials, .seed = o.seed, .info_weight = o.info_weight, .threads = o.threads});
    const std::string detail = std::string(method_name(dc.method)) + ": " + std::to_string(dc.even.upper) + " vs " +
                               std::to_string(dc.odd.upper);
    if (dc.verdict == EqualityVerdict::Inconclusive)
        r.inconclusive("d(C_0) = d(C_1)", detail);
    else
        r.add("d(C_0) = d(C_1)", dc.verdict != EqualityVerdict::Unequal, detail);
}

void check_thm16(Context& ctx, Report& r) {
    const std::uint64_t n = ctx.n();
    const std::uint64_t d = theorem_bound(ctx.q(), ctx.m(), Parity::Even);
    check_bound(ctx, r, Parity::Even);
    check_bound(ctx, r, Parity::Odd);
    const BaseField& f = ctx.field()->base();
    for (Parity p : {Parity::Even, Parity::Odd}) {
        const CyclicCode c = base_code(ctx.field(), p);
        const std::string tag = std::to_string(parity_index(p));
        r.add("C_" + tag + " is " + params(n, (n + 1) / 2), c.dimension() == (n + 1) / 2);
        const CyclicCode el = even_like(c);
        r.add("even-like C_" + tag + " is " + params(n, (n - 1) / 2), el.dimension() == (n - 1) / 2);
        // Both derived codes are subcodes (or extensions) of C, so d >= d(C) >= the bound.
        bool sub = true;
        for (std::uint32_t x : c.defining_set().elems()) sub = sub && el.defining_set().contains(x);
        r.add("even-like C_" + tag + " is a subcode of C_" + tag + " (d >= " + std::to_string(d) + ")", sub);
        if (n <= kMatrixLimit) {
            const GfMatrix ext = extend_code(c);
            r.add("extended C_" + tag + " is self-dual " + params(n + 1, (n + 1) / 2), is_self_dual(f, ext));
        } else {
            r.skip("extended C_" + tag + " self-dual", "n above the matrix-check limit");
        }
    }
}

void check_thm18(Context& ctx, Report& r) {
    const std::uint64_t n = ctx.n();
    const DefiningSet t0 = build_T(ctx.q(), ctx.m(), Parity::Even);
    const DefiningSet t1 = build_T(ctx.q(), ctx.m(), Parity::Odd);
    r.add("C_0 is " + params(n, (n + 3) / 2), n - t0.size() == (n + 3) / 2);
    r.add("C_1 is " + params(n, (n - 1) / 2), n - t1.size() == (n - 1) / 2);
    r.add("C_0 is LCD (-T_0 = T_0)", negate_set(t0) == t0);
    r.add("C_1 is LCD (-T_1 = T_1)", negate_set(t1) == t1);
    check_bound(ctx, r, Parity::Even);
    check_bound(ctx, r, Parity::Odd);
}

void check_lemma5(Context& ctx, Report& r) {
    const unsigned m = ctx.m();
    std::size_t tried = 0;
    for (unsigned l = 1; l <= 2 * m; ++l) {
        if ((m / std::gcd(l, m)) % 2 == 0) continue;
        ++tried;
        r.add("gcd(q^m - 1, q^" + std::to_string(l) + " + 1) = 1", gcd_lemma5_check(ctx.q(), l, m));
    }
    if (tried == 0) throw ParameterError("no admissible l for this m");
}

void check_lemma6(Context& ctx, Report& r) {
    if (ctx.q() < 4) throw ParameterError("lemma6 requires q >= 4");
    for (std::uint64_t a = 2; a <= ctx.q() - 1; ++a)
        for (unsigned h = 0; h < ctx.m(); ++h)
            r.add("A = " + std::to_string(a) + ", h = " + std::to_string(h), lemma6_check(ctx.q(), ctx.m(), a, h));
}

void check_lemma_witness(Context& ctx, LemmaId id, Report& r) {
    const LemmaWitness lw = lemma_witness(id, ctx.q(), ctx.m());
    const DefiningSet T = build_T(ctx.q(), ctx.m(), lw.target);
    const std::uint64_t n = ctx.n();
    r.add("gcd(a, n) = 1", std::gcd(lw.witness.a % n, n) == 1, "a = " + std::to_string(lw.witness.a));
    r.add("progression lies in T_" + std::to_string(parity_index(lw.target)), ap_in_set(T, lw.witness),
          witness_to_json(lw.witness).dump());
    const std::uint64_t want = theorem_bound(ctx.q(), ctx.m(), lw.target);
    r.add("delta matches the closed-form bound", lw.witness.delta() == want, eq_detail(lw.witness.delta(), want));
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
    Context ctx(o);
    const std::string& id = o.id;
    Report r;
    if (id == "lemma1") {
        check_lemma1(ctx, r);
    } else if (id == "thm2") {
        require_odd_m(ctx, id);
        check_thm2(ctx, r);
    } else if (id == "thm3") {
        require_even_m(ctx, id);
        check_thm3(ctx, r);
    } else if (id == "thm8") {
        require_q4(ctx, id);
        require_odd_m(ctx, id);
        check_thm8(ctx, o, r);
    } else if (id == "thm12") {
        require_q4(ctx, id);
        if (ctx.m() % 4 != 2) throw ParameterError("thm12 requires m = 2 mod 4");
        check_bound(ctx, r, Parity::Even);
        check_bound(ctx, r, Parity::Odd);
    } else if (id == "thm15") {
        require_q4(ctx, id);
        if (ctx.m() % 4 != 0) throw ParameterError("thm15 requires m = 0 mod 4");
        check_bound(ctx, r, Parity::Even);
        check_bound(ctx, r, Parity::Odd);
    } else if (id == "thm16") {
        require_q4(ctx, id);
        require_odd_m(ctx, id);
        check_thm16(ctx, r);
    } else if (id == "thm18") {
        require_q4(ctx, id);
        require_even_m(ctx, id);
        check_thm18(ctx, r);
    } else if (id == "lemma5") {
        check_lemma5(ctx, r);
    } else if (id == "lemma6") {
        check_lemma6(ctx, r);
    } else if (const auto lemma = parse_lemma(id); lemma && *lemma != LemmaId::Thm12M2Even &&
                                                    *lemma != LemmaId::Thm12M2Odd) {
        check_lemma_witness(ctx, *lemma, r);
    } else {
        throw ParameterError("unknown --id " + id);
    }

    Json j;
    j["id"] = id;
    j["q"] = ctx.q();
    j["m"] = ctx.m();
    j["n"] = ctx.n();
    Json checks = Json::array();
    std::ostringstream text;
    text << id << " q=" << ctx.q() << " m=" << ctx.m() << " n=" << ctx.n() << "\n";
    for (const Check& c : r.checks()) {
        checks.push_back(Json{{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
        text << "  [" << c.status << "] " << c.name << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    }
    j["checks"] = checks;
    j["pass"] = r.passed();
    text << (r.passed() ? "PASS" : "FAIL") << "\n";
    emit(o, out, j, text.str());
    return r.passed() ? kOk : kClaimFailed;
}

// --------------------------------------------------------------- distance

// Lower bound available without enumeration, with its source.
std::pair<std::uint64_t, std::string> known_lower(Context& ctx, const Variant& v, Parity p, const Options& o) {
    std::uint64_t best = 1;
    std::string src = "none";
    const bool contains_base = o.variant == "plain" || o.variant == "even_like" || o.variant == "extended";
    if (ctx.q() >= 4 && contains_base) {
        const BoundReport b = lemma_bound(ctx.q(), ctx.m(), p);
        best = b.delta;
        src = b.source;
    }
    if (ctx.n() <= kSearchLimit) {
        const DefiningSet& T = v.code ? v.code->defining_set() : v.base.defining_set();
        const BoundReport b = bch_search(T, {.budget = o.budget, .threads = o.threads});
        if (b.delta > best) {
            best = b.delta;
            src = "search";
        }
    }
    return {best, src};
}

int cmd_distance(const Options& o, std::ostream& out, std::ostream&) {
    Context ctx(o);
    const Parity p = parity_of(o);
    if (ctx.n() > kSearchLimit) throw ParameterError("distance supports n <= " + std::to_string(kSearchLimit));
    const Variant v = make_variant(ctx, p, o.variant);
    const BaseField& f = ctx.field()->base();
    const GfMatrix g = variant_matrix(v);
    const ExactOptions eo{.cap = o.cap, .threads = o.threads};
    const SampleOptions so{.trials = o.trials, .seed = o.seed, .info_weight = o.info_weight, .threads = o.threads};
    DistanceReport r;
    if (o.distance_method == "exact")
        r = exact_distance(f, g, eo);
    else if (o.distance_method == "sampled")
        r = sampled_upper(f, g, so);
    else if (o.distance_method == "auto")
        r = measure_distance(f, g, eo, so);
    else
        throw ParameterError("--method must be auto, exact or sampled");
    const auto [lower, src] = known_lower(ctx, v, p, o);
    r.lower = r.exact ? *r.exact : lower;
    const bool consistent = lower <= r.upper;

    Json j = distance_to_json(r);
    j["length"] = g.cols();
    j["k"] = variant_dimension(v);
    j["bound"] = lower;
    j["bound_source"] = src;
    std::ostringstream text;
    text << code_name(ctx.q(), ctx.m(), p) << (o.variant == "plain" ? "" : " " + o.variant) << " "
         << params(g.cols(), variant_dimension(v)) << "\n";
    if (r.exact)
        text << "d = " << *r.exact << " (exhaustive)\n";
    else
        text << lower << " <= d <= " << r.upper << " (sampled, seed " << o.seed << ")\n";
    text << "bound " << lower << " from " << src << "\n";
    emit(o, out, j, text.str());
    return consistent ? kOk : kClaimFailed;
}

// ------------------------------------------------------------------ bound

int cmd_bound(const Options& o, std::ostream& out, std::ostream&) {
    Context ctx(o);
    const Parity p = parity_of(o);
    BoundReport r;
    if (!o.lemma.empty()) {
        const auto id = parse_lemma(o.lemma);
        if (!id) throw ParameterError("unknown lemma " + o.lemma);
        const LemmaWitness lw = lemma_witness(*id, ctx.q(), ctx.m());
        r.witness = lw.witness;
        r.delta = lw.witness.delta();
        r.source = o.lemma;
    } else if (o.bound_method == "lemma") {
        r = lemma_bound(ctx.q(), ctx.m(), p);
    } else if (o.bound_method == "closed") {
        r.delta = theorem_bound(ctx.q(), ctx.m(), p);
        r.source = "closed_form";
    } else if (o.bound_method == "search") {
        if (ctx.n() > (1ULL << 16)) throw ParameterError("search supports n <= 65536");
        r = bch_search(build_T(ctx.q(), ctx.m(), p), {.budget = o.budget, .threads = o.threads});
    } else {
        throw ParameterError("--method must be lemma, closed or search");
    }
    std::ostringstream text;
    text << code_name(ctx.q(), ctx.m(), p) << ": d >= " << r.delta << " (" << r.source
         << (r.partial ? ", partial" : "") << ")\n";
    if (r.witness)
        text << "progression b = " << r.witness->b << ", a = " << r.witness->a << ", i in [" << r.witness->i_lo
             << ", " << r.witness->i_hi << "]\n";
    emit(o, out, bound_to_json(r), text.str());
    return kOk;
}

// ------------------------------------------------------------------ table

DefiningSet with_zero(const DefiningSet& T) {
    std::vector<std::int64_t> r(T.elems().begin(), T.elems().end());
    r.push_back(0);
    return DefiningSet(T.n(), T.q(), r);
}

struct Row {
    unsigned s, m;
    std::string code;
    std::uint64_t n, k, bound;
    std::optional<std::uint64_t> bch, upper;
};

int cmd_table(const Options& o, std::ostream& out, std::ostream&) {
    if (o.section != 16 && o.section != 18) throw ParameterError("--section must be 16 or 18");
    const std::uint64_t limit = max_n();
    std::vector<Row> rows;
    for (unsigned s = 2; s <= 8; ++s) {
        const std::uint64_t q = std::uint64_t{1} << s;
        if (o.q && *o.q != q) continue;
        for (unsigned m = 2; s * m <= 20; ++m) {
            if (o.m && *o.m != m) continue;
            if ((m % 2 == 1) != (o.section == 16)) continue;
            const std::uint64_t n = (std::uint64_t{1} << (s * m)) - 1;
            if (n > limit) continue;
            std::shared_ptr<const FieldTower> field;
            auto upper_of = [&](auto&& make_matrix) -> std::optional<std::uint64_t> {
                if (o.table_trials == 0 || n > kSearchLimit) return std::nullopt;
                if (!field) field = make_field(s, m);
                return sampled_upper(field->base(), make_matrix(),
                                     {.trials = o.table_trials, .seed = o.seed, .info_weight = o.info_weight,
                                      .threads = o.threads})
                    .upper;
            };
            auto bch_of = [&](const DefiningSet& T) -> std::optional<std::uint64_t> {
                if (n > kSearchLimit) return std::nullopt;
                return bch_search(T, {.budget = o.budget, .threads = o.threads}).delta;
            };
            const std::string qm = std::to_string(q) + "," + std::to_string(m);
            if (o.section == 16) {
                const DefiningSet t0 = build_T(q, m, Parity::Even);
                const std::uint64_t d = theorem_bound(q, m, Parity::Even);
                const auto bch = bch_of(t0);
                auto code = [&](Parity p) { return base_code(field, p); };
                rows.push_back({s, m, "C_(" + qm + ";i)", n, (n + 1) / 2, d, bch, upper_of([&] {
                                    return generator_matrix(code(Parity::Even));
                                })});
                rows.push_back({s, m, "extended C_(" + qm + ";i)", n + 1, (n + 1) / 2, d, bch,
                                upper_of([&] { return extend_code(code(Parity::Even)); })});
                rows.push_back({s, m, "even-like C_(" + qm + ";i)", n, (n - 1) / 2, d,
                                bch_of(with_zero(t0)),
                                upper_of([&] { return generator_matrix(even_like(code(Parity::Even))); })});
            } else {
                for (Parity p : {Parity::Even, Parity::Odd}) {
                    const DefiningSet T = build_T(q, m, p);
                    rows.push_back({s, m, "C_(" + qm + ";" + std::to_string(parity_index(p)) + ")", n,
                                    n - T.size(), theorem_bound(q, m, p), bch_of(T), upper_of([&] {
                                        return generator_matrix(base_code(field, p));
                                    })});
                }
            }
        }
    }

    Json j;
    j["section"] = o.section;
    Json arr = Json::array();
    std::ostringstream text;
    for (const Row& r : rows) {
        arr.push_back(Json{{"s", r.s},
                           {"q", std::uint64_t{1} << r.s},
                           {"m", r.m},
                           {"code", r.code},
                           {"n", r.n},
                           {"k", r.k},
                           {"bound", r.bound},
                           {"bch", r.bch ? Json(*r.bch) : Json(nullptr)},
                           {"upper", r.upper ? Json(*r.upper) : Json(nullptr)}});
        text << "[" << r.n << ", " << r.k << ", >=" << r.bound << "]  " << r.code;
        if (r.bch) text << "  bch " << *r.bch;
        if (r.upper) text << "  upper " << *r.upper;
        text << "\n";
    }
    j["rows"] = arr;
    emit(o, out, j, text.str());
    return kOk;
}

void add_common(CLI::App* sub, Options& o, bool need_code) {
    sub->add_option("--q", o.q, "field size q = 2^s");
    sub->add_option("--m", o.m, "extension degree");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "pretty"}));
    sub->add_flag("--pretty", o.pretty, "same as --format pretty");
    sub->add_option("--out", o.out, "write the report to a file");
    sub->add_option("--field-spec", o.field_spec, "JSON field spec overriding the default moduli");
    sub->add_option("--threads", o.threads, "worker threads (0 = all cores)");
    if (need_code) {
        sub->add_option("--parity", o.parity, "0 or 1");
        sub->add_option("--variant", o.variant, "plain, even_like, dual, complement or extended")
            ->check(CLI::IsMember({"plain", "even_like", "dual", "complement", "extended"}));
    }
}

void add_search(CLI::App* sub, Options& o) {
    sub->add_option("--seed", o.seed, "sampling seed");
    sub->add_option("--cap", o.cap, "maximum codewords for exhaustive enumeration");
    sub->add_option("--trials", o.trials, "random information sets for sampled bounds");
    sub->add_option("--info-weight", o.info_weight, "rows combined per information set (1..3)");
    sub->add_option("--budget", o.budget, "membership tests allowed in bch_search");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"cyclic codes over GF(2^s) from q-weight parity", "tdcodes"};
    app.require_subcommand(1);

    auto* construct = app.add_subcommand("construct", "build a code and print it");
    add_common(construct, o, true);

    auto* inspect = app.add_subcommand("inspect", "structural properties of a code");
    add_common(inspect, o, true);

    auto* verify = app.add_subcommand("verify", "check a theorem or lemma instance");
    add_common(verify, o, false);
    verify->add_option("--id", o.id, "thm2 thm3 thm8 thm12 thm15 thm16 thm18 lemma1 lemma5 lemma6 lemma7 ...")
        ->required();
    add_search(verify, o);

    auto* distance = app.add_subcommand("distance", "exact or sampled minimum distance");
    add_common(distance, o, true);
    add_search(distance, o);
    distance->add_option("--method", o.distance_method, "auto, exact or sampled");

    auto* bound = app.add_subcommand("bound", "BCH lower bound");
    add_common(bound, o, true);
    bound->add_option("--method", o.bound_method, "lemma, closed or search");
    bound->add_option("--id", o.lemma, "a specific lemma progression, e.g. lemma13");
    bound->add_option("--budget", o.budget, "membership tests allowed in the search");

    auto* table = app.add_subcommand("table", "parameter tables for odd (16) or even (18) m");
    add_common(table, o, false);
    table->add_option("--section", o.section, "16 or 18");
    table->add_option("--seed", o.seed, "sampling seed");
    table->add_option("--trials", o.table_trials, "sampled distance trials per row (0 = skip)");
    table->add_option("--info-weight", o.info_weight, "rows combined per information set (1..3)");
    table->add_option("--budget", o.budget, "membership tests allowed in bch_search");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*construct) return cmd_construct(o, out, err);
        if (*inspect) return cmd_inspect(o, out, err);
        if (*verify) return cmd_verify(o, out, err);
        if (*distance) return cmd_distance(o, out, err);
        if (*bound) return cmd_bound(o, out, err);
        if (*table) return cmd_table(o, out, err);
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const FieldError& e) {
        err << "field error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}

}  // namespace tdcodes::cli
