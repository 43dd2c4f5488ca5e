// fockcorr: correlators, q-dimensions, the Fock-space oracle and identity checks.
#include "fockcorr/correlators.hpp"
#include "fockcorr/fock_oracle.hpp"
#include "fockcorr/identities.hpp"
#include "fockcorr/json_io.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

using namespace fockcorr;

namespace {

constexpr const char* kSchema = "fock-correlators/1";

// exit codes
constexpr int kFail = 1, kBadArgs = 2, kPole = 3, kResource = 4;

struct Common {
    bool json = false;
    unsigned threads = 0;
    std::string cache_dir;
    std::size_t max_states = OracleSpec{}.max_states;
};

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string trim(std::string s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    return s;
}

std::vector<Rational> parse_list(const std::string& s)
{
    std::vector<Rational> out;
    for (const auto& x : split(s, ',')) out.push_back(parse_rational(trim(x)));
    return out;
}

// exact square root of a nonnegative rational, if there is one
std::optional<Rational> rational_sqrt(const Rational& t)
{
    if (t < 0) return std::nullopt;
    mpz_class n = t.get_num(), d = t.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    Rational r{mpz_class(sqrt(n)), mpz_class(sqrt(d))};
    r.canonicalize();
    return r;
}

// level "2" or "3/2" -> twice the level
long parse_level2(const std::string& s)
{
    Rational l = parse_rational(s);
    Rational l2 = l * 2;
    if (l2.get_den() != 1 || l2 < 0) throw std::invalid_argument("--level must be a nonnegative multiple of 1/2");
    return l2.get_num().get_si();
}

ModuleLabel make_label(const std::string& alg, const std::string& level, const std::string& lambda, bool det, bool spin)
{
    ModuleLabel lab;
    lab.algebra = parse_algebra(alg);
    lab.level2 = parse_level2(level);
    lab.det = det;
    lab.spin = spin || lab.algebra == Algebra::B;
    if (lab.algebra == Algebra::A && lab.level2 % 2) throw std::invalid_argument("type a has integer levels only");
    const int l = lab.rank();
    auto vals = parse_list(lambda);
    if (vals.empty()) vals.assign(static_cast<std::size_t>(l), Rational(lab.spin ? Rational(1, 2) : Rational(0)));
    bool halves = false;
    for (const auto& v : vals)
        if (v.get_den() != 1) halves = true;
    for (const auto& v : vals) {
        Rational m = v;
        if (halves) {
            if (!lab.spin) throw std::invalid_argument("half-integer weights need --spin");
            m -= Rational(1, 2);
        }
        if (m.get_den() != 1) throw std::invalid_argument("weights must be all integers or all in 1/2 + Z");
        lab.parts.push_back(m.get_num().get_si());
    }
    lab.validate();
    return lab;
}

json series_json(const json& s, const std::string& cmd, const json& params)
{
    return {{"schema", kSchema}, {"command", cmd}, {"params", params}, {"series", s}};
}

template <class R>
void emit(const QSeries<R>& s, const std::string& cmd, const json& params, const Common& c)
{
    if (c.json) std::cout << series_json(series_to_json(s), cmd, params).dump(2) << "\n";
    else std::cout << s.str() << "\n";
}

// content-addressed result cache; any read problem just means a miss
std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

std::filesystem::path cache_path(const Common& c, const json& key)
{
    std::ostringstream os;
    os << std::hex << fnv1a(key.dump());
    return std::filesystem::path(c.cache_dir) / (os.str() + ".json");
}

std::optional<json> cache_get(const Common& c, const json& key)
{
    if (c.cache_dir.empty()) return std::nullopt;
    std::ifstream in(cache_path(c, key));
    if (!in) return std::nullopt;
    try {
        json j = json::parse(in);
        if (j.at("key") == key) return j.at("series");
    } catch (const std::exception&) {
    }
    return std::nullopt;
}

void cache_put(const Common& c, const json& key, const json& series)
{
    if (c.cache_dir.empty()) return;
    std::filesystem::create_directories(c.cache_dir);
    std::ofstream out(cache_path(c, key));
    out << json{{"key", key}, {"series", series}}.dump();
}

template <class R>
void emit_cached(const json& series, const std::string& cmd, const json& params, const Common& c)
{
    emit(series_from_json<R>(series), cmd, params, c);
}

struct CorrArgs {
    std::string algebra = "d", level = "1", lambda, mode = "eval", s, order = "5";
    bool det = false, spin = false;
    int n = -1;
};

int run_corr(const CorrArgs& a, const Common& c)
{
    ModuleLabel lab = make_label(a.algebra, a.level, a.lambda, a.det, a.spin);
    QExp order = QExp::parse(a.order);
    if (order <= QExp()) throw std::invalid_argument("--order must be positive");
    auto svals = parse_list(a.s);
    int n = a.n >= 0 ? a.n : static_cast<int>(svals.size());
    bool exact = a.mode == "exact";
    if (!exact && a.mode != "eval") throw std::invalid_argument("--mode is exact or eval");
    if (!exact && static_cast<int>(svals.size()) != n) throw std::invalid_argument("eval mode needs --s with n values");
    if (exact && !svals.empty()) throw std::invalid_argument("--s is for eval mode");
    json params = {{"algebra", std::string(1, algebra_char(lab.algebra))}, {"level", QExp::half(lab.level2).str()},
                   {"label", lab.str()}, {"n", n}, {"order", order.str()}, {"mode", a.mode}};
    if (!exact) {
        json sj = json::array();
        for (const auto& x : svals) sj.push_back(to_string(x));
        params["s"] = sj;
    }
    json key = {{"cmd", "corr"}, {"params", params}};
    if (auto hit = cache_get(c, key)) {
        if (exact) emit_cached<RationalFunction>(*hit, "corr", params, c);
        else emit_cached<Rational>(*hit, "corr", params, c);
        return 0;
    }
    if (exact) {
        Correlators<RationalFunction> corr(symbolic_args(n), order);
        auto s = corr.npoint(lab);
        cache_put(c, key, series_to_json(s));
        emit(s, "corr", params, c);
    } else {
        Correlators<Rational> corr(svals, order);
        auto s = corr.npoint(lab);
        cache_put(c, key, series_to_json(s));
        emit(s, "corr", params, c);
    }
    return 0;
}

int run_qdim(const CorrArgs& a, const Common& c)
{
    ModuleLabel lab = make_label(a.algebra, a.level, a.lambda, a.det, a.spin);
    QExp order = QExp::parse(a.order);
    if (order <= QExp()) throw std::invalid_argument("--order must be positive");
    json params = {{"algebra", std::string(1, algebra_char(lab.algebra))}, {"level", QExp::half(lab.level2).str()},
                   {"label", lab.str()}, {"order", order.str()}};
    emit(qdim(lab, order), "qdim", params, c);
    return 0;
}

struct OracleArgs {
    int pairs = 1, neutral = 0;
    std::string sector = "ns", ops = "none", order = "5";
    std::optional<long> charge;
    bool zgraded = false;
};

std::vector<OracleOp> parse_ops(const std::string& text)
{
    std::vector<OracleOp> out;
    if (trim(text) == "none" || trim(text).empty()) return out;
    int sym = 0;
    for (const auto& item : split(text, ';')) {
        auto fields = split(item, ',');
        if (fields.empty()) continue;
        std::string k = trim(fields[0]);
        if (k.size() != 1 || std::string("ADCBadcb").find(k[0]) == std::string::npos)
            throw std::invalid_argument("operator must be one of A, D, C, B: " + item);
        OracleOp op{static_cast<char>(std::toupper(static_cast<unsigned char>(k[0]))), LaurentPoly::var(Var::s(sym), 1)};
        if (fields.size() == 1) {
            ++sym;
        } else if (fields.size() == 2) {
            std::string f = trim(fields[1]);
            if (f.rfind("s=", 0) == 0) op.s = LaurentPoly(parse_rational(f.substr(2)));
            else if (f.rfind("t=", 0) == 0) {
                auto r = rational_sqrt(parse_rational(f.substr(2)));
                if (!r) throw std::invalid_argument("t must be the square of a rational; pass s = t^(1/2) instead");
                op.s = LaurentPoly(*r);
            } else throw std::invalid_argument("bad operator argument: " + f);
        } else throw std::invalid_argument("bad operator: " + item);
        out.push_back(op);
    }
    return out;
}

int run_oracle(const OracleArgs& a, const Common& c)
{
    OracleSpec sp;
    sp.pairs = a.pairs;
    sp.neutral = a.neutral != 0;
    if (a.neutral != 0 && a.neutral != 1) throw std::invalid_argument("--neutral is 0 or 1");
    if (a.sector == "ns") sp.sector = Sector::NS;
    else if (a.sector == "r") sp.sector = Sector::R;
    else throw std::invalid_argument("--sector is ns or r");
    sp.cutoff = QExp::parse(a.order);
    if (sp.cutoff <= QExp()) throw std::invalid_argument("--order must be positive");
    sp.charge = a.charge;
    sp.zgraded = a.zgraded;
    sp.max_states = c.max_states;
    auto ops = parse_ops(a.ops);
    auto res = trace(sp, ops);
    json params = {{"pairs", a.pairs}, {"neutral", a.neutral}, {"sector", a.sector}, {"ops", a.ops}, {"order", sp.cutoff.str()},
                   {"zgraded", a.zgraded}, {"states", res.states}};
    if (a.charge) params["charge"] = *a.charge;
    bool numeric = res.denominator.is_constant();
    if (numeric && !a.zgraded) emit(res.as_rational(), "oracle", params, c);
    else if (numeric) emit(res.as_laurent(), "oracle", params, c);
    else emit(res.as_ratfunc(), "oracle", params, c);
    return 0;
}

struct VerifyArgs {
    std::string id;
    std::string type, order, mode, s;
    int l = -1, n = -1, trials = 20;
    unsigned seed = 17;
};

int run_verify(const VerifyArgs& a, const Common& c)
{
    std::vector<std::string> ids;
    if (a.id == "all") {
        for (const auto& info : identity_registry()) ids.push_back(info.id);
    } else {
        if (!is_identity(a.id)) throw std::invalid_argument("unknown identity: " + a.id);
        ids.push_back(a.id);
    }
    IdentityParams p;
    if (!a.type.empty()) {
        char t = static_cast<char>(std::toupper(static_cast<unsigned char>(a.type[0])));
        if (a.type.size() != 1 || (t != 'B' && t != 'C' && t != 'D')) throw std::invalid_argument("--type is B, C or D");
        p.type = t;
    }
    if (a.l >= 0) p.l = a.l;
    if (a.n >= 0) p.n = a.n;
    if (!a.order.empty()) p.order = QExp::parse(a.order);
    if (!a.mode.empty()) {
        if (a.mode != "exact" && a.mode != "eval") throw std::invalid_argument("--mode is exact or eval");
        p.exact = a.mode == "exact";
    }
    p.s = parse_list(a.s);
    p.trials = a.trials;
    p.seed = a.seed;

    std::vector<std::optional<IdentityReport>> reports(ids.size());
    std::vector<std::string> errors(ids.size());
    std::vector<int> codes(ids.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < ids.size();) {
            try {
                reports[i] = run_identity(ids[i], p);
            } catch (const ResourceError& e) {
                errors[i] = e.what(), codes[i] = kResource;
            } catch (const PoleError& e) {
                errors[i] = e.what(), codes[i] = kPole;
            } catch (const std::invalid_argument& e) {
                errors[i] = e.what(), codes[i] = kBadArgs;
            }
        }
    };
    unsigned nt = std::max(1u, std::min<unsigned>(c.threads, static_cast<unsigned>(ids.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nt; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    int code = 0;
    json out = json::array();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (!reports[i]) {
            if (!c.json) std::cout << ids[i] << ": ERROR " << errors[i] << "\n";
            out.push_back({{"id", ids[i]}, {"error", errors[i]}});
            if (!code || code == kFail) code = codes[i];
            continue;
        }
        const auto& r = *reports[i];
        if (!r.pass() && !code) code = kFail;
        if (!c.json) {
            std::cout << r.str();
            continue;
        }
        json checks = json::array();
        for (const auto& ch : r.checks) {
            json cj = {{"what", ch.what}, {"pass", ch.pass}};
            if (ch.order > QExp()) cj["order"] = ch.order.str();
            if (!ch.pass) cj["mismatch"] = ch.detail;
            checks.push_back(cj);
        }
        out.push_back({{"id", r.id}, {"statement", r.statement}, {"params", r.params}, {"order", r.order.str()}, {"pass", r.pass()},
                       {"checks", checks}});
    }
    if (c.json) std::cout << json{{"schema", kSchema}, {"command", "verify"}, {"reports", out}}.dump(2) << "\n";
    return code;
}

int run_list(const Common& c)
{
    if (c.json) {
        json out = json::array();
        for (const auto& i : identity_registry()) out.push_back({{"id", i.id}, {"statement", i.statement}, {"defaults", i.defaults}});
        std::cout << json{{"schema", kSchema}, {"command", "list-identities"}, {"identities", out}}.dump(2) << "\n";
        return 0;
    }
    for (const auto& i : identity_registry()) std::cout << i.id << "  " << i.statement << "  [" << i.defaults << "]\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact n-point functions on Fock-space modules of types a, b, c, d"};
    app.require_subcommand(1);
    Common common;
    common.threads = std::max(1u, std::thread::hardware_concurrency());
    app.add_flag("--json", common.json, "emit JSON")->configurable(false);
    app.add_option("--threads", common.threads, "worker threads for verify")->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", common.cache_dir, "directory for memoized corr results (safe to delete)");
    app.add_option("--max-states", common.max_states, "oracle state budget")->check(CLI::PositiveNumber);
    app.fallthrough();

    CorrArgs ca;
    auto* corr = app.add_subcommand("corr", "closed-form n-point function");
    corr->add_option("--algebra", ca.algebra, "a, b, c or d")->required();
    corr->add_option("--level", ca.level, "level, e.g. 2 or 3/2")->required();
    corr->add_option("--lambda", ca.lambda, "comma-separated weight (default zero)");
    corr->add_flag("--det", ca.det, "orthogonal label twisted by det");
    corr->add_flag("--spin", ca.spin, "spin label (weight in 1/2 + Z)");
    corr->add_option("--n", ca.n, "number of insertions")->check(CLI::NonNegativeNumber);
    corr->add_option("--order", ca.order, "truncation: terms below q^order")->required();
    corr->add_option("--mode", ca.mode, "exact or eval")->capture_default_str();
    corr->add_option("--s", ca.s, "comma-separated s_i = t_i^(1/2) (eval)");

    CorrArgs qa;
    auto* qd = app.add_subcommand("qdim", "q-dimension");
    qd->add_option("--algebra", qa.algebra)->required();
    qd->add_option("--level", qa.level)->required();
    qd->add_option("--lambda", qa.lambda);
    qd->add_flag("--det", qa.det);
    qd->add_flag("--spin", qa.spin);
    qd->add_option("--order", qa.order)->required();

    OracleArgs oa;
    long charge = 0;
    auto* orc = app.add_subcommand("oracle", "brute-force Fock-space trace");
    orc->add_option("--pairs", oa.pairs)->check(CLI::NonNegativeNumber);
    orc->add_option("--neutral", oa.neutral);
    orc->add_option("--sector", oa.sector, "ns or r");
    orc->add_option("--ops", oa.ops, "none, or e.g. \"D,s=2;D,t=9\" (no value: symbolic s_i)");
    auto* ch = orc->add_option("--charge", charge, "restrict to total charge (ns)");
    orc->add_flag("--zgraded", oa.zgraded, "attach z_p^charge (r sector: r_p^(2 charge))");
    orc->add_option("--order", oa.order)->required();

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "check an identity (or all)");
    ver->add_option("id", va.id, "identity id or 'all'")->required();
    ver->add_option("--type", va.type);
    ver->add_option("--l", va.l);
    ver->add_option("--n", va.n);
    ver->add_option("--order", va.order);
    ver->add_option("--mode", va.mode, "exact or eval");
    ver->add_option("--s", va.s);
    ver->add_option("--trials", va.trials)->check(CLI::PositiveNumber);
    ver->add_option("--seed", va.seed);

    auto* lst = app.add_subcommand("list-identities", "list the identity registry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kBadArgs;
    }
    try {
        if (*corr) return run_corr(ca, common);
        if (*qd) return run_qdim(qa, common);
        if (*orc) {
            if (*ch) oa.charge = charge;
            return run_oracle(oa, common);
        }
        if (*ver) return run_verify(va, common);
        if (*lst) return run_list(common);
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kResource;
    } catch (const PoleError& e) {
        std::cerr << "pole: " << e.what() << "\n";
        return kPole;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadArgs;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadArgs;
    }
    return kBadArgs;
}
