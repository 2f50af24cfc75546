#include "report.hpp"

#include "rankone/errors.hpp"
#include "rankone/hypergeom.hpp"
#include "rankone/scalars.hpp"
#include "rankone/so_model.hpp"
#include "rankone/spherical.hpp"
#include "rankone/tensor.hpp"

#include <algorithm>
#include <sstream>

namespace rankone::cli {

namespace {

std::string str(const Rational& q) { return to_string(q); }
std::string str(const Integer& z) { return z.str(); }

json weight_json(const IWeight& w) {
    json arr = json::array();
    for (const auto& c : to_weight(w)) arr.push_back(str(c));
    return arr;
}

class Checks {
public:
    void add(const std::string& name, const std::string& tag, bool ok, const std::string& detail = "") {
        json c{{"name", name}, {"tag", tag}, {"status", ok ? "pass" : "fail"}};
        if (!detail.empty()) c["detail"] = detail;
        items_.push_back(std::move(c));
    }
    void na(const std::string& name, const std::string& tag, const std::string& detail) {
        items_.push_back({{"name", name}, {"tag", tag}, {"status", "n/a"}, {"detail", detail}});
    }
    json take() { return std::move(items_); }

private:
    json items_ = json::array();
};

// Collects up to a few failing instances for the detail field.
class Tally {
public:
    void record(bool ok, const std::string& what) {
        ++total_;
        if (!ok && bad_.size() < 5) bad_.push_back(what);
        if (!ok) ++failed_;
    }
    bool ok() const { return total_ > 0 && failed_ == 0; }
    std::string detail() const {
        std::string s = std::to_string(total_ - failed_) + "/" + std::to_string(total_) + " instances";
        for (const auto& b : bad_) s += "; failed " + b;
        return s;
    }

private:
    int total_ = 0, failed_ = 0;
    std::vector<std::string> bad_;
};

json header(const std::string& command, json inputs) {
    return {{"command", command}, {"inputs", std::move(inputs)}};
}

json family_inputs(const GroupFamily& g) { return {{"family", g.name()}}; }

std::vector<GroupFamily> families(int depth, bool with_so21) {
    std::vector<GroupFamily> out;
    for (int n = with_so21 ? 2 : 3; n <= 3 + depth; ++n) out.push_back(GroupFamily::so(n));
    for (int n = 2; n <= 2 + depth / 2; ++n) out.push_back(GroupFamily::su(n));
    for (int n = 2; n <= 2 + depth / 3; ++n) out.push_back(GroupFamily::sp(n));
    out.push_back(GroupFamily::f4());
    return out;
}

std::string names(const std::vector<KTypeLabel>& ls) {
    std::string s;
    for (const auto& l : ls) s += (s.empty() ? "" : " ") + l.name();
    return s;
}

bool exceptional_routes_agree(const GroupFamily& g, const Rational& lo) {
    auto scan = exceptional_by_scan(g, lo, 0);
    std::vector<Rational> closed;
    for (int l = 0;; ++l) {
        Rational mu = exceptional_param(g, l);
        if (mu < lo) break;
        closed.push_back(mu);
    }
    return scan == closed;
}

void verify_groups(const Options& opt, Checks& checks) {
    Tally rho, routes, mink, lang;
    for (const auto& g : families(opt.depth, true)) {
        StructuralData s = structural_data(g);
        rho.record(s.rho_H == Rational(s.m_alpha + 2 * s.m_2alpha, 2) && s.dim_p == s.m_alpha + s.m_2alpha + 1 &&
                       s.sphere_dim == s.dim_p - 1,
                   g.name());
        routes.record(exceptional_routes_agree(g, -60), g.name());
        for (int l = 0; l <= opt.depth; ++l) {
            std::string id = g.name() + " l=" + std::to_string(l);
            mink.record(minimal_ktype(g, l) == minimal_ktype_closed_form(g, l), id);
            lang.record(langlands_invariants_hold(langlands(g, l)), id);
        }
    }
    checks.add("structural data consistency", "structural-table", rho.ok(), rho.detail());
    checks.add("Gamma poles agree with closed form on [-60,0]", "exceptional-parameters", routes.ok(), routes.detail());
    checks.add("minimal K-type search equals closed form", "socle-minimal-k-type", mink.ok(), mink.detail());
    checks.add("Langlands classification invariants", "langlands-data", lang.ok(), lang.detail());
}

void verify_tensor(const Options& opt, Checks& checks) {
    Tally stated, oracle, dims;
    int oracle_bound = std::min(opt.depth, 3);
    for (const auto& g : families(opt.depth, false)) {
        for (const auto& l : labels_up_to(g, opt.depth)) {
            std::string id = g.name() + " " + l.name();
            auto rs = racah_speiser(g, l);
            auto w = rs.weights();
            auto st = stated_decomposition(g, l);
            std::sort(w.begin(), w.end());
            std::sort(st.begin(), st.end());
            bool mult_one = std::all_of(rs.summands.begin(), rs.summands.end(), [](auto& s) { return s.multiplicity == 1; });
            stated.record(w == st && mult_one, id);
            dims.record(dimension_sum_check(g, l).ok, id);
            if (*std::max_element(l.coords().begin(), l.coords().end()) <= oracle_bound && g.n() <= 5) {
                auto oc = character_oracle(g, l);
                bool same = oc.summands.size() == rs.summands.size();
                for (std::size_t i = 0; same && i < oc.summands.size(); ++i)
                    same = oc.summands[i].weight == rs.summands[i].weight &&
                           oc.summands[i].multiplicity == rs.summands[i].multiplicity;
                oracle.record(same, id);
            }
        }
    }
    checks.add("Racah-Speiser equals stated decomposition", "tensor-decomposition", stated.ok(), stated.detail());
    checks.add("Racah-Speiser equals character oracle", "tensor-decomposition", oracle.ok(), oracle.detail());
    checks.add("dimension sum dim(p) dim(Y)", "tensor-dimension", dims.ok(), dims.detail());
}

void verify_spherical(const Options& opt, Checks& checks) {
    Tally sum, pos, recip, ident;
    for (const auto& g : families(opt.depth, false)) {
        for (const auto& V : labels_up_to(g, opt.depth)) {
            std::string id = g.name() + " " + V.name();
            auto row = omega_h_expand(g, V);
            Rational total = 0;
            bool nonneg = true, rec = true;
            for (const auto& [Y, c] : row.terms) {
                total += c;
                nonneg = nonneg && c > 0;
                rec = rec && c * Rational(weyl_dim(V)) == lambda_scalar(g, Y, V) * Rational(weyl_dim(Y));
            }
            sum.record(total == 1, id);
            pos.record(nonneg, id);
            recip.record(rec, id);
            ident.record(verify_omega_identity(g, V), id);
        }
    }
    checks.add("lambda coefficients sum to 1", "lambda-normalization", sum.ok(), sum.detail());
    checks.add("lambda coefficients positive", "lambda-positivity", pos.ok(), pos.detail());
    checks.add("lambda(V,Y) dim V = lambda(Y,V) dim Y", "lambda-reciprocity", recip.ok(), recip.detail());
    checks.add("omega(H) recurrence identities", "omega-recurrence", ident.ok(), ident.detail());

    Tally hyp;
    for (const auto& t : random_terminating_triples(200, opt.seed))
        for (const auto& id : contiguous_relation_ids)
            hyp.record(check_contiguous(id, t[0], t[1], t[2]),
                       id + " at (" + str(t[0]) + "," + str(t[1]) + "," + str(t[2]) + ")");
    checks.add("contiguous relations on 200 seeded triples", "hypergeometric-relations", hyp.ok(), hyp.detail());
}

void verify_scalars(const Options& opt, Checks& checks) {
    Tally van, triv, growth, order;
    for (const auto& g : families(opt.depth, false)) {
        auto rep = vanishing_table_details(g, opt.depth);
        van.record(rep.ok(), g.name() + (rep.failures.empty() ? "" : " " + rep.failures.front()));
        KTypeLabel one = spherical_neighbours(g, labels_up_to(g, 0).front()).front();
        KTypeLabel trivial = labels_up_to(g, 0).front();
        triv.record(t_root(g, one, trivial) == structural_data(g).rho_H, g.name());
        if (g.variant() == Variant::SO) continue;
        for (int l = 0; l <= 3; ++l) {
            for (int steps = 1; steps <= 10 * opt.depth; steps += 3) {
                auto [it, cl] = growth_product(g, l, steps, 1);
                growth.record(it == cl, g.name() + " l=" + std::to_string(l) + " steps=" + std::to_string(steps));
            }
            order.record(growth_order_estimate(g, l) == growth_spec(g, l).order, g.name() + " l=" + std::to_string(l));
        }
    }
    checks.add("T vanishes on every proof-table row", "scalar-vanishing", van.ok(), van.detail());
    checks.add("T from Y_1 to the trivial type vanishes at rho", "trivial-type-root", triv.ok(), triv.detail());
    checks.add("growth products equal closed forms", "growth-closed-form", growth.ok(), growth.detail());
    checks.add("growth exponents", "growth-order", order.ok(), order.detail());
}

void verify_so_model(const Options& opt, Checks& checks) {
    Tally zonal, rt, inter, exc, tworho, repro;
    for (int n = 3; n <= 5; ++n)
        for (int k = 0; k <= opt.depth + 2; ++k) {
            Rational dim(weyl_dim(KTypeLabel(GroupFamily::so(n), {k})));
            zonal.record(so::zonal_l2_norm(n, k) * dim == 1 && so::harmonic_extension_check(so::zonal_poly(n, k)),
                         "n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    std::mt19937_64 rng(opt.seed);
    for (int n = 2; n <= 5; ++n)
        for (int i = 0; i < 25; ++i) {
            so::Mat g = so::random_lorentz(n, rng);
            rt.record((so::reconstruct(so::iwasawa(g)) - g).cwiseAbs().maxCoeff() <= 1e-9, "n=" + std::to_string(n));
        }
    const Rational mus[] = {-2, -1, Rational(-1, 2), 0, Rational(1, 2), 1};
    for (int n = 3; n <= 4; ++n)
        for (int k = 0; k <= 3; ++k) {
            for (const auto& mu : mus) {
                auto r = so::verify_intertwining(n, k, mu, 1e-4, 50, opt.seed);
                inter.record(r.max_residual <= opt.tolerance && r.h_direction_residual <= opt.tolerance,
                             "n=" + std::to_string(n) + " k=" + std::to_string(k) + " mu=" + str(mu));
            }
            exc.record(std::abs(so::exceptional_projection(n, k, 1e-4, 50, opt.seed)) <= opt.tolerance,
                       "n=" + std::to_string(n) + " l=" + std::to_string(k));
        }
    for (int n = 2; n <= 6; ++n) tworho.record(so::check_2rho(n), "n=" + std::to_string(n));
    repro.record(so::reproducing_check_exact(3, 1, {so::pythagorean_rotation(3, 0, 1, 3, 4, 5)}), "n=3 k=1");
    repro.record(so::reproducing_check_exact(4, 3, {so::pythagorean_rotation(4, 0, 2, 5, 12, 13)}), "n=4 k=3");
    repro.record(so::reproducing_check(4, 2, {so::random_rotation(4, rng)}), "n=4 k=2 random");
    checks.add("zonal norm 1/dim and harmonicity", "zonal-functions", zonal.ok(), zonal.detail());
    checks.add("Iwasawa round trip within 1e-9", "iwasawa", rt.ok(), rt.detail());
    checks.add("gradient of Poisson transform matches T scalars", "intertwining-scalars", inter.ok(), inter.detail());
    checks.add("raising component vanishes at exceptional parameters", "exceptional-gradient", exc.ok(), exc.detail());
    checks.add("2 rho bracket identities", "two-rho", tworho.ok(), tworho.detail());
    checks.add("reproducing property of zonal functions", "zonal-reproducing", repro.ok(), repro.detail());
}

}  // namespace

json cmd_structure(const GroupFamily& g) {
    json r = header("structure", family_inputs(g));
    StructuralData s = structural_data(g);
    json exc = json::array();
    for (const auto& p : exceptional_params(g, 4)) exc.push_back(str(p.mu_H));
    r["results"] = {{"m_alpha", s.m_alpha},     {"m_2alpha", s.m_2alpha},     {"rho_H", str(s.rho_H)},
                    {"dim_p", s.dim_p},         {"sphere_dim", s.sphere_dim}, {"exceptional_mu_H", exc}};
    Checks c;
    c.add("rho(H) = (m_alpha + 2 m_2alpha)/2", "structural-table",
          s.rho_H == Rational(s.m_alpha + 2 * s.m_2alpha, 2));
    c.add("first exceptional parameters are Gamma poles", "exceptional-parameters",
          std::all_of(exc.begin(), exc.end(), [&](const json& m) {
              return is_exceptional(g, {parse_rational(m.get<std::string>())});
          }));
    r["checks"] = c.take();
    return r;
}

json cmd_exceptional(const GroupFamily& g, int count) {
    if (count < 1) throw DomainError("count must be positive");
    json r = header("exceptional", {{"family", g.name()}, {"count", count}});
    json rows = json::array();
    Rational lo = exceptional_param(g, count - 1);
    auto scan = exceptional_by_scan(g, lo, 0);
    for (int l = 0; l < count; ++l) {
        Rational mu = exceptional_param(g, l);
        auto args = e_inverse_gamma_args(g, {mu});
        rows.push_back({{"ell", l},
                        {"closed_form", str(mu)},
                        {"scan", l < int(scan.size()) ? json(str(scan[l])) : json(nullptr)},
                        {"gamma_args", {str(args.first), str(args.second)}}});
    }
    r["results"] = {{"parameters", rows}};
    std::vector<Rational> closed;
    for (int l = 0; l < count; ++l) closed.push_back(exceptional_param(g, l));
    Checks c;
    c.add("Gamma-pole scan equals closed form", "exceptional-parameters", scan == closed);
    r["checks"] = c.take();
    return r;
}

json cmd_socle(const GroupFamily& g, int ell) {
    if (ell < 0) throw DomainError("ell must be nonnegative");
    json r = header("socle", {{"family", g.name()}, {"ell", ell}});
    auto found = minimal_ktype(g, ell);
    auto closed = minimal_ktype_closed_form(g, ell);
    json mins = json::array();
    for (const auto& l : found)
        mins.push_back({{"label", l.name()},
                        {"highest_weight", weight_json(highest_iweight(l))},
                        {"dimension", str(weyl_dim(l))},
                        {"norm", str(mintype_norm(g, highest_weight(l)))}});
    LanglandsRecord lr = langlands(g, ell);
    json lj{{"S", std::string(1, lr.S)},
            {"omega_weight", lr.omega_weight ? json(*lr.omega_weight) : json(nullptr)},
            {"omega_validated", lr.omega_validated},
            {"nu_H", lr.nu_H ? json(str(*lr.nu_H)) : json(nullptr)},
            {"tempered", lr.tempered},
            {"discrete_series", lr.discrete_series},
            {"limit_of_discrete_series", lr.limit_of_discrete_series}};
    r["results"] = {{"mu_H", str(exceptional_param(g, ell))}, {"minimal_ktypes", mins}, {"langlands", lj}};
    Checks c;
    c.add("search equals closed form (" + names(closed) + ")", "socle-minimal-k-type", found == closed);
    c.add("minimal K-types lie in the socle", "socle-minimal-k-type",
          std::all_of(found.begin(), found.end(), [&](const KTypeLabel& l) { return socle_contains(g, ell, l); }));
    c.add("Langlands invariants", "langlands-data", langlands_invariants_hold(lr));
    r["checks"] = c.take();
    return r;
}

json cmd_tensor(const GroupFamily& g, const KTypeLabel& label) {
    json r = header("tensor", {{"family", g.name()}, {"label", label.name()}});
    auto rs = racah_speiser(g, label);
    json rows = json::array();
    for (const auto& s : rs.summands)
        rows.push_back({{"highest_weight", weight_json(s.weight)},
                        {"label", s.label ? json(s.label->name()) : json(nullptr)},
                        {"multiplicity", s.multiplicity},
                        {"m_spherical", s.m_spherical},
                        {"dimension", str(weyl_dim(g, s.weight))}});
    DimensionSum ds = dimension_sum_check(g, label);
    r["results"] = {{"summands", rows}, {"dimension_total", str(ds.total)}, {"dimension_expected", str(ds.expected)}};
    auto w = rs.weights();
    auto st = stated_decomposition(g, label);
    std::sort(w.begin(), w.end());
    std::sort(st.begin(), st.end());
    Checks c;
    c.add("dimension sum", "tensor-dimension", ds.ok);
    c.add("equals stated decomposition", "tensor-decomposition", w == st);
    r["checks"] = c.take();
    return r;
}

json cmd_scalars(const GroupFamily& g, const KTypeLabel& V, const KTypeLabel& Y, const Rational& mu) {
    json r = header("scalars", {{"family", g.name()}, {"V", V.name()}, {"Y", Y.name()}, {"mu_H", str(mu)}});
    ScalarPair sp = scalar_pair(g, V, Y);
    Rational t = t_scalar(g, V, Y, {mu});
    Rational root = t_root(g, V, Y);
    r["results"] = {{"lambda", str(sp.lam)}, {"nu", str(sp.nu)}, {"T", str(t)}, {"root_mu_H", str(root)}};
    Checks c;
    c.add("root equals proof-table value", "scalar-vanishing", root == proof_table_root(g, V, Y));
    r["checks"] = c.take();
    return r;
}

json cmd_verify(const std::string& suite, const Options& opt) {
    static const std::vector<std::string> suites{"all", "groups", "tensor", "spherical", "scalars", "so-model"};
    if (std::find(suites.begin(), suites.end(), suite) == suites.end())
        throw DomainError("unknown suite '" + suite + "'");
    if (opt.depth < 1) throw DomainError("depth must be positive");
    json r = header("verify", {{"suite", suite}, {"depth", opt.depth}, {"seed", opt.seed}, {"tolerance", opt.tolerance}});
    Checks c;
    auto want = [&](const char* s) { return suite == "all" || suite == s; };
    if (want("groups")) verify_groups(opt, c);
    if (want("tensor")) verify_tensor(opt, c);
    if (want("spherical")) verify_spherical(opt, c);
    if (want("scalars")) verify_scalars(opt, c);
    if (want("so-model")) verify_so_model(opt, c);
    r["checks"] = c.take();
    return r;
}

bool passed(const json& report) {
    const json checks = report.value("checks", json::array());
    for (const auto& c : checks)
        if (c.at("status") == "fail") return false;
    return true;
}

std::string to_csv(const json& report) {
    auto quote = [](std::string s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        return q + "\"";
    };
    std::ostringstream os;
    os << "kind,name,tag,status,detail\n";
    const json results = report.value("results", json::object());
    const json checks = report.value("checks", json::array());
    for (const auto& [k, v] : results.items())
        os << "result," << quote(k) << ",,," << quote(v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    for (const auto& c : checks)
        os << "check," << quote(c.at("name")) << "," << quote(c.at("tag")) << "," << c.at("status").get<std::string>()
           << "," << quote(c.value("detail", "")) << "\n";
    return os.str();
}

}  // namespace rankone::cli
