// syang: command-line front end.

#include <atomic>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sy/envelope.hpp"
#include "sy/evaluate.hpp"
#include "sy/gauss.hpp"
#include "sy/morphisms.hpp"
#include "sy/parser.hpp"
#include "sy/presentation.hpp"
#include "sy/properties.hpp"
#include "sy/rtt.hpp"

using json = nlohmann::ordered_json;
using namespace sy;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailed = 2;

const char* kGrammar = R"(Expressions:
  expr    := term (('+' | '-') term)*
  term    := unary ('*' unary)*
  unary   := '-' unary | primary
  primary := rational | atom | '[' expr ',' expr ']' | '(' expr ')'
  rational:= p | p/q
  atoms   := t[i,j,r] | tp[i,j,r] | D[a,i,j,r] | Dp[a,i,j,r]
           | E[a,b,i,j,r] | F[b,a,i,j,r] | e[i,j] | x[i,j,r]
[x, y] is the supercommutator. t and tp live in Y(s), tp being the
coefficients of T(u)^{-1}; D, Dp, E, F are the Gauss coefficients for --mu;
e[i,j] lives in U(gl) and x[i,j,r] = e_ij x^r in U(gl[x]).

Exit status: 0 ok, 1 usage or parse error, 2 verification failure.)";

struct Common {
    std::string seq;
    std::string mu;
    int cap = 3;
    std::string format = "text";
    int jobs = 1;
    std::uint64_t seed = 0;

    bool json() const { return format == "json"; }
    ZeroOneSequence sequence() const { return ZeroOneSequence::parse(seq); }
    Composition composition(const ZeroOneSequence& s) const {
        return mu.empty() ? Composition::trivial(s) : Composition::parse(s, mu);
    }
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_common(CLI::App* sub, Common& c, bool needs_cap = true) {
    sub->add_option("--seq", c.seq, "0/1 sequence, e.g. 0101")->required();
    sub->add_option("--mu", c.mu, "composition of M+N, e.g. 1,2,1");
    if (needs_cap) sub->add_option("--cap", c.cap, "series truncation")->check(CLI::PositiveNumber);
    sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--seed", c.seed, "seed for randomized suites");
}

json record(const char* type) {
    json j;
    j["schema"] = "1";
    j["type"] = type;
    return j;
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

// ---- normalize --------------------------------------------------------------

int run_normalize(const Common& c, const std::string& text) {
    Expr expr = parse_expression(text);
    ZeroOneSequence seq = c.sequence();
    std::optional<Composition> mu;
    if (!c.mu.empty()) mu = c.composition(seq);
    Evaluated ev;
    try {
        ev = evaluate_expression(expr, seq, mu, c.cap);
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        for (auto [from, to] : {std::pair{"exceeds cap", "exceeds --cap"}, std::pair{"need a composition", "need --mu"}})
            if (auto at = msg.find(from); at != std::string::npos) msg.replace(at, std::string(from).size(), to);
        throw UsageError(msg);
    }
    const std::string& algebra = ev.algebra;
    const Element& result = ev.value;
    if (c.json()) {
        json j = record("result");
        j["command"] = "normalize";
        j["algebra"] = algebra;
        j["input"] = expr.str();
        j["result"] = result.str();
        j["terms"] = result.terms().size();
        emit(j);
    } else {
        std::cout << result.str() << '\n';
    }
    return kExitOk;
}

// ---- gauss ------------------------------------------------------------------

int run_gauss(const Common& c) {
    ZeroOneSequence seq = c.sequence();
    Composition mu = c.composition(seq);
    YangianContext ctx(seq);
    GaussFactors g = decompose(ctx, mu, c.cap);
    auto line = [&](const std::string& name, const std::vector<int>& idx, const Element& v) {
        std::string ref = name + "[";
        for (std::size_t k = 0; k < idx.size(); ++k) ref += (k ? "," : "") + std::to_string(idx[k]);
        ref += "]";
        if (c.json()) {
            json j = record("coefficient");
            j["name"] = ref;
            j["value"] = v.str();
            emit(j);
        } else {
            std::cout << ref << " = " << v.str() << '\n';
        }
    };
    const int n = mu.blocks();
    for (int a = 1; a <= n; ++a)
        for (int i = 1; i <= mu.part(a); ++i)
            for (int j = 1; j <= mu.part(a); ++j)
                for (int r = 1; r <= c.cap; ++r) line("D", {a, i, j, r}, g.D_coeff(a, i, j, r));
    for (int a = 1; a <= n; ++a)
        for (int i = 1; i <= mu.part(a); ++i)
            for (int j = 1; j <= mu.part(a); ++j)
                for (int r = 1; r <= c.cap; ++r) line("Dp", {a, i, j, r}, g.Dp_coeff(a, i, j, r));
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int i = 1; i <= mu.part(a); ++i)
                for (int j = 1; j <= mu.part(b); ++j)
                    for (int r = 1; r <= c.cap; ++r) line("E", {a, b, i, j, r}, g.E_coeff(a, b, i, j, r));
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int i = 1; i <= mu.part(b); ++i)
                for (int j = 1; j <= mu.part(a); ++j)
                    for (int r = 1; r <= c.cap; ++r) line("F", {b, a, i, j, r}, g.F_coeff(b, a, i, j, r));
    return kExitOk;
}

// ---- morphism ---------------------------------------------------------------

// "p,q,prefix", "p,q" (prefix 0^p 1^q) or just "prefix".
ZeroOneSequence parse_prefix(const std::string& params) {
    std::vector<std::string> parts;
    std::stringstream ss(params);
    for (std::string tok; std::getline(ss, tok, ',');) parts.push_back(tok);
    auto as_int = [](const std::string& s) {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size() || v < 0) throw UsageError("bad --params entry '" + s + "'");
        return v;
    };
    try {
        if (parts.size() == 1) return ZeroOneSequence::parse(parts[0]);
        if (parts.size() == 2) return ZeroOneSequence::standard(as_int(parts[0]), as_int(parts[1]));
        if (parts.size() == 3) {
            int p = as_int(parts[0]), q = as_int(parts[1]);
            ZeroOneSequence s = ZeroOneSequence::parse(parts[2]);
            if (s.zeros() != p || s.ones() != q)
                throw UsageError("--params: prefix " + parts[2] + " does not have p zeros and q ones");
            return s;
        }
    } catch (const std::logic_error& e) {
        throw UsageError(std::string("--params: ") + e.what());
    }
    throw UsageError("--params expects p,q,prefix");
}

int run_morphism(const Common& c, const std::string& kind_name, const std::string& params, const std::string& text) {
    MorphismKind kind = parse_morphism_kind(kind_name);
    ZeroOneSequence prefix;
    if (kind == MorphismKind::phi || kind == MorphismKind::psi) {
        if (params.empty()) throw UsageError("--apply " + kind_name + " needs --params p,q,prefix");
        prefix = parse_prefix(params);
    }
    Morphism m(kind, c.sequence(), c.cap, prefix);

    auto out = [&](const std::string& input, const std::string& image) {
        if (c.json()) {
            json j = record("image");
            j["morphism"] = m.str();
            j["input"] = input;
            j["image"] = image;
            emit(j);
        } else {
            std::cout << morphism_name(kind) << "(" << input << ") = " << image << '\n';
        }
    };

    if (!text.empty()) {
        Expr expr = parse_expression(text);
        const std::set<Family> fam = families_in(expr);
        if (fam.size() > 1 || (fam.size() == 1 && !fam.count(Family::T)))
            throw UsageError("morphisms act on expressions in t[i,j,r] only");
        const YangianContext& src = m.source();
        Element x = expr.evaluate(
            [&](const Atom& a) -> Element {
                if (a.idx[2] == 0) return a.idx[0] == a.idx[1] ? Element(1) : Element();
                return src.t(a.idx[0], a.idx[1], a.idx[2]);
            },
            nullptr);
        if (kind == MorphismKind::delta)
            out(expr.str(), m.apply_tensor(x).str());
        else
            out(expr.str(), m.apply(x).str());
        return kExitOk;
    }

    if (!c.json()) std::cout << m.str() << '\n';
    const int n = m.source().dim();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int r = 1; r <= c.cap; ++r) {
                std::string in = "t[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(r) + "]";
                out(in, kind == MorphismKind::delta ? m.tensor_image(i, j, r).str() : m.image(i, j, r).str());
            }
    return kExitOk;
}

// ---- verify -----------------------------------------------------------------

struct Tally {
    std::size_t checked = 0, failures = 0;
};

class Verifier {
public:
    Verifier(const Common& c, int max_degree, int samples) : c_(c), max_degree_(max_degree), samples_(samples) {}

    int run(const std::string& spec) {
        std::vector<std::string> ids;
        std::string rest;
        {
            std::stringstream ss(spec);
            for (std::string tok; std::getline(ss, tok, ',');) {
                if (tok == "CONFLUENCE" || tok == "JACOBI" || tok == "GR")
                    ids.push_back(tok);
                else
                    rest += (rest.empty() ? "" : ",") + tok;
            }
        }
        std::vector<std::string> resolved = rest.empty() ? std::vector<std::string>{} : resolve_relation_ids(rest);
        ids.insert(ids.begin(), resolved.begin(), resolved.end());
        if (ids.empty()) throw UsageError("--relations selects nothing");

        for (const auto& id : ids) {
            Tally t;
            if (id == "CONFLUENCE" || id == "JACOBI" || id == "GR")
                t = property(id);
            else if (is_series(id))
                t = series(id);
            else
                t = relation(id);
            if (!c_.json())
                std::cout << id << ": checked " << t.checked << ", failures " << t.failures << '\n';
            total_.checked += t.checked;
            total_.failures += t.failures;
        }
        if (c_.json()) {
            json j = record("summary");
            j["command"] = "verify";
            j["seq"] = seq_.str();
            j["mu"] = mu_str();
            j["checked"] = total_.checked;
            j["failures"] = total_.failures;
            j["ok"] = total_.failures == 0;
            emit(j);
        } else {
            std::cout << "summary: " << total_.checked << " checked, " << total_.failures << " failures\n";
        }
        return total_.failures ? kExitFailed : kExitOk;
    }

private:
    static bool is_series(const std::string& id) {
        const auto& s = series_identity_ids();
        return std::find(s.begin(), s.end(), id) != s.end();
    }

    std::string mu_str() const {
        std::string s;
        for (int p : mu_.parts()) s += (s.empty() ? "" : ",") + std::to_string(p);
        return s;
    }

    const GaussFactors& factors(int cap) {
        auto it = factors_.find(cap);
        if (it == factors_.end()) it = factors_.emplace(cap, decompose(ctx_, mu_, cap)).first;
        return it->second;
    }

    Tally relation(const std::string& id) {
        Tally t;
        std::vector<RelationInstance> batch;
        auto flush = [&] {
            if (batch.empty()) return;
            int cap = 1;
            for (const auto& inst : batch) cap = std::max(cap, inst.required_cap());
            const GaussFactors& g = factors(cap);
            std::vector<Element> res(batch.size());
            std::atomic<std::size_t> next{0};
            auto work = [&] {
                for (std::size_t k; (k = next++) < batch.size();) res[k] = evaluate_under_gamma(batch[k], g, ctx_);
            };
            const int workers = std::min<int>(c_.jobs, static_cast<int>(batch.size()));
            if (workers <= 1) {
                work();
            } else {
                std::vector<std::thread> pool;
                for (int w = 0; w < workers; ++w) pool.emplace_back(work);
                for (auto& th : pool) th.join();
            }
            for (std::size_t k = 0; k < batch.size(); ++k) {
                bool zero = res[k].is_zero();
                ++t.checked;
                if (!zero) ++t.failures;
                if (c_.json()) {
                    json j = record("instance");
                    j["id"] = batch[k].id;
                    j["key"] = batch[k].key();
                    j["zero"] = zero;
                    j["residual"] = res[k].str();
                    emit(j);
                } else if (!zero) {
                    std::cout << "FAIL " << batch[k].key() << ": residual " << res[k].str() << '\n';
                }
            }
            batch.clear();
        };
        for_each_instance(id, mu_, max_degree_, [&](RelationInstance inst) {
            batch.push_back(std::move(inst));
            if (batch.size() >= 256) flush();
        });
        flush();
        return t;
    }

    Tally series(const std::string& id) {
        Tally t;
        for (const auto& rep : evaluate_series_identity(id, ctx_, mu_, c_.cap)) {
            ++t.checked;
            if (!rep.zero) ++t.failures;
            if (c_.json()) {
                json j = record("instance");
                j["id"] = rep.id;
                j["key"] = rep.key();
                j["window"] = rep.window.str();
                j["coefficients"] = rep.checked;
                j["zero"] = rep.zero;
                j["residual"] = rep.residual.empty() ? "0" : rep.residual;
                emit(j);
            } else if (!rep.zero) {
                std::cout << "FAIL " << rep.key() << " on " << rep.window.str() << ": " << rep.residual << '\n';
            }
        }
        return t;
    }

    Tally property(const std::string& id) {
        ClaimReport rep = id == "CONFLUENCE" ? check_confluence(ctx_, samples_, c_.seed)
                          : id == "JACOBI"   ? check_super_jacobi(ctx_, samples_, c_.seed)
                                             : check_gr_brackets(ctx_, max_degree_ + 1);
        if (c_.json()) {
            json j = record("instance");
            j["id"] = id;
            j["key"] = rep.claim + "(" + rep.window + ")";
            j["checked"] = rep.checked;
            j["zero"] = rep.ok();
            j["residual"] = rep.counterexample.empty() ? "0" : rep.counterexample;
            emit(j);
        } else if (!rep.ok()) {
            std::cout << "FAIL " << rep.claim << ": " << rep.counterexample << '\n';
        }
        return Tally{1, rep.ok() ? 0u : 1u};
    }

    const Common& c_;
    int max_degree_;
    int samples_;
    ZeroOneSequence seq_ = c_.sequence();
    Composition mu_ = c_.composition(seq_);
    YangianContext ctx_{seq_};
    std::map<int, GaussFactors> factors_;
    Tally total_;
};

// ---- pbw-audit --------------------------------------------------------------

int run_pbw(const Common& c, int bound, bool levi) {
    ZeroOneSequence seq = c.sequence();
    Composition mu = c.composition(seq);
    YangianContext ctx(seq);
    PbwReport rep = pbw_audit(ctx, mu, bound);
    bool ok = rep.ok;
    std::optional<LeviReport> lv;
    if (levi) {
        lv = levi_audit(ctx, mu, c.cap);
        ok = ok && lv->failures == 0;
    }
    if (c.json()) {
        json j = record("pbw");
        j["seq"] = seq.str();
        j["degree_bound"] = rep.degree_bound;
        j["monomials"] = rep.monomials;
        j["distinct_leading"] = rep.distinct_leading;
        j["loop_count"] = rep.loop_count;
        j["mismatched_generators"] = rep.mismatched_generators;
        j["bad_leading"] = rep.bad_leading;
        j["ok"] = rep.ok;
        if (!rep.detail.empty()) j["detail"] = rep.detail;
        emit(j);
        if (lv) {
            json l = record("levi");
            l["checked"] = lv->checked;
            l["failures"] = lv->failures;
            if (!lv->first_failure.empty()) l["first_failure"] = lv->first_failure;
            emit(l);
        }
    } else {
        std::cout << "supermonomials: " << rep.monomials << "\n"
                  << "distinct leading terms: " << rep.distinct_leading << "\n"
                  << "U(gl[x]) monomials: " << rep.loop_count << "\n"
                  << "mismatched generator images: " << rep.mismatched_generators << "\n"
                  << "bad leading terms: " << rep.bad_leading << "\n";
        if (!rep.detail.empty()) std::cout << rep.detail << '\n';
        if (lv)
            std::cout << "levi: " << lv->checked << " checked, " << lv->failures << " failures"
                      << (lv->first_failure.empty() ? "" : " (" + lv->first_failure + ")") << '\n';
        std::cout << (ok ? "ok" : "FAILED") << '\n';
    }
    return ok ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Super Yangian symbolic engine"};
    app.footer(kGrammar);
    app.require_subcommand(1);

    Common c;
    std::string expr_text, apply, params, relations = "all";
    int max_degree = 3, samples = 500, bound = 2;
    bool levi = false;

    auto* norm = app.add_subcommand("normalize", "normal form of an expression");
    add_common(norm, c);
    norm->add_option("expr", expr_text, "expression")->required();

    auto* gauss = app.add_subcommand("gauss", "Gauss coefficient table");
    add_common(gauss, c);

    auto* mor = app.add_subcommand("morphism", "images under rho, omega, zeta, phi, psi, ev, delta");
    add_common(mor, c);
    mor->add_option("--apply", apply, "map")
        ->required()
        ->check(CLI::IsMember({"rho", "omega", "zeta", "phi", "psi", "ev", "delta"}));
    mor->add_option("--params", params, "p,q,prefix for phi and psi");
    mor->add_option("expr", expr_text, "expression in t[i,j,r]; omitted: generator table");

    auto* ver = app.add_subcommand("verify", "check relations, series identities and properties");
    add_common(ver, c);
    ver->add_option("--relations", relations,
                    "ids: all, R7.1..R7.16, R6.4E, R6.4F, SERRE-E, SERRE-F, R3.11, R5.1..R5.9, R6.1a.., "
                    "group prefixes (R7, R5, R6.3), CONFLUENCE, JACOBI, GR");
    ver->add_option("--max-degree", max_degree, "largest r, s, l")->check(CLI::PositiveNumber);
    ver->add_option("--samples", samples, "samples for CONFLUENCE and JACOBI")->check(CLI::PositiveNumber);

    auto* pbw = app.add_subcommand("pbw-audit", "leading-term audit of ordered supermonomials");
    add_common(pbw, c);
    pbw->add_option("--max-degree", bound, "loop degree bound")->check(CLI::NonNegativeNumber);
    pbw->add_flag("--levi", levi, "also check the Levi relations at --cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*norm) return run_normalize(c, expr_text);
        if (*gauss) return run_gauss(c);
        if (*mor) return run_morphism(c, apply, params, expr_text);
        if (*ver) return Verifier(c, max_degree, samples).run(relations);
        if (*pbw) return run_pbw(c, bound, levi);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
