#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "iqg/json_io.hpp"
#include "iqg/suite.hpp"

using namespace iqg;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("IO", "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

IntVec parse_w(const OrbitQuiver& o, const std::string& spec) {
    IntVec w = o.zero_w();
    std::stringstream ss(spec);
    std::string part;
    int i = 0;
    while (std::getline(ss, part, ',')) {
        if (i >= w.size()) throw Error("USAGE", "too many w entries");
        w[i++] = std::stoi(part);
    }
    return w;
}

IntVec parse_v(const OrbitQuiver& o, const std::string& spec) {
    IntVec v = o.zero_v();
    if (spec.empty()) return v;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto eq = part.find('=');
        std::string rk = eq == std::string::npos ? part : part.substr(0, eq);
        int mult = eq == std::string::npos ? 1 : std::stoi(part.substr(eq + 1));
        IntVec root(o.quiver().rank);
        std::stringstream rs(rk);
        std::string digit;
        int idx = 0;
        while (std::getline(rs, digit, '.')) root[idx++] = std::stoi(digit);
        v[o.knit().root_index(root)] += mult;
    }
    return v;
}

// monomial syntax: "1", "-1", "v", "-v^2", "v^-1", "v^1/2", "3v^-3/2"
HalfLaurent parse_monomial(std::string s) {
    long long coeff = 1;
    size_t pos = 0;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        if (s[pos] == '-') coeff = -1;
        ++pos;
    }
    size_t d0 = pos;
    while (pos < s.size() && isdigit(s[pos])) ++pos;
    if (pos > d0) coeff *= std::stoll(s.substr(d0, pos - d0));
    if (pos < s.size() && s[pos] == '*') ++pos;
    int uexp = 0;
    if (pos < s.size()) {
        if (s[pos] != 'v') throw Error("USAGE", "bad monomial " + s);
        ++pos;
        int num = 1, den = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            size_t e0 = pos;
            if (pos < s.size() && s[pos] == '-') ++pos;
            while (pos < s.size() && isdigit(s[pos])) ++pos;
            num = std::stoi(s.substr(e0, pos - e0));
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                den = std::stoi(s.substr(pos));
                pos = s.size();
            }
        }
        if (den == 1) uexp = 2 * num;
        else if (den == 2) uexp = num;
        else throw Error("USAGE", "exponent denominator must be 1 or 2");
    }
    return HalfLaurent::u_pow(uexp, coeff);
}

int run_suite(const std::vector<IQuiver>& qs, unsigned sections, bool json_out) {
    int failures = 0;
    for (auto& q : qs) {
        std::cout << "== " << quiver_tag(q) << "\n";
        for (auto& r : run_fixture_suite(q, sections)) {
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  [" << r.anchor << "]";
            if (!r.detail.empty()) std::cout << "  -- " << r.detail;
            std::cout << "\n";
            if (!r.pass) ++failures;
        }
    }
    (void)json_out;
    std::cout << (failures ? "FAILURES: " : "all checks passed: ") << failures << "\n";
    return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of quantum Grothendieck rings over Dynkin i-quivers"};
    app.require_subcommand(1);

    std::string quiver_path, catalog_path, wspec, vspec, format = "table";
    std::string left_w, left_v, right_w, right_v, varsigma_spec;
    int seed = 0;
    bool json_out = false;

    auto add_common = [&](CLI::App* sub, bool need_quiver = true) {
        auto* opt = sub->add_option("--quiver", quiver_path, "i-quiver JSON file");
        if (need_quiver) opt->required();
        sub->add_flag("--json", json_out, "machine-readable output");
        sub->add_option("--seed", seed, "seed echoed for reproducibility");
        return sub;
    };

    auto* roots_cmd = add_common(app.add_subcommand("roots", "positive roots of the diagram"));
    auto* dercat_cmd = app.add_subcommand("dercat", "repetition quiver tools");
    dercat_cmd->require_subcommand(1);
    auto* dump_cmd = add_common(dercat_cmd->add_subcommand("dump", "labelled window and functors"));
    dump_cmd->add_option("--format", format, "json|dot");
    auto* table1_cmd = add_common(app.add_subcommand("table1", "order of the orbit functor"));
    auto* pairs_cmd = add_common(app.add_subcommand("pairs", "strongly dominant pairs at w"));
    pairs_cmd->add_option("--w", wspec, "frozen dimension vector, comma separated")->required();
    auto* dform_cmd = add_common(app.add_subcommand("dform", "d-form fixture table"));
    auto* mult_cmd = add_common(app.add_subcommand("multiply", "product of two L-basis classes"));
    mult_cmd->add_option("--catalog", catalog_path, "extra case catalog JSON");
    mult_cmd->add_option("--left-w", left_w)->required();
    mult_cmd->add_option("--left-v", left_v);
    mult_cmd->add_option("--right-w", right_w)->required();
    mult_cmd->add_option("--right-v", right_v);
    auto* verify_cmd = add_common(app.add_subcommand("verify-iserre", "relation ledger"));
    verify_cmd->add_option("--catalog", catalog_path, "extra case catalog JSON");
    auto* basis_cmd = add_common(app.add_subcommand("basis", "filtration basis at w"));
    basis_cmd->add_option("--w", wspec)->required();
    auto* reduce_cmd = add_common(app.add_subcommand("reduce", "normal form in the reduced ring"));
    reduce_cmd->add_option("--w", wspec)->required();
    reduce_cmd->add_option("--v", vspec, "v as rootkey=mult, comma separated");
    reduce_cmd->add_option("--varsigma", varsigma_spec, "one monomial per vertex, comma separated");
    auto* cross_cmd = add_common(app.add_subcommand("crosscheck", "linear-algebra oracle"));
    auto* suite_cmd = add_common(app.add_subcommand("paper-suite", "full fixture ledger"), false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        auto load = [&]() { return quiver_from_json(slurp(quiver_path)); };

        if (roots_cmd->parsed()) {
            IQuiver q = load();
            auto roots = positive_roots(q);
            if (json_out) {
                std::cout << "[";
                for (size_t i = 0; i < roots.size(); ++i) {
                    std::cout << (i ? ",\"" : "\"");
                    for (int t = 0; t < roots[i].size(); ++t)
                        std::cout << roots[i][t] << (t + 1 < roots[i].size() ? "." : "");
                    std::cout << "\"";
                }
                std::cout << "]\n";
            } else {
                for (auto& r : roots) {
                    for (int t = 0; t < r.size(); ++t) std::cout << r[t] << (t + 1 < r.size() ? "." : "");
                    std::cout << "\n";
                }
                std::cout << roots.size() << " positive roots\n";
            }
        } else if (dercat_cmd->parsed()) {
            KnitTable k(load());
            std::cout << (format == "dot" ? knit_to_dot(k) : knit_to_json(k));
        } else if (table1_cmd->parsed()) {
            KnitTable k(load());
            auto ord = k.sigma_rho_order();
            if (json_out) {
                std::cout << "{\"power\":" << ord.power << ",\"pure\":" << (ord.pure ? "true" : "false")
                          << "}\n";
            } else {
                std::cout << "Sigma rho = tau^{-" << ord.power << "}";
                if (!ord.pure) {
                    std::cout << " composed with the vertex permutation (";
                    for (size_t t = 0; t < ord.extra.size(); ++t)
                        std::cout << ord.extra[t] + 1 << (t + 1 < ord.extra.size() ? " " : "");
                    std::cout << ")";
                }
                std::cout << "  [h = " << k.coxeter() << "]\n";
            }
        } else if (pairs_cmd->parsed()) {
            OrbitQuiver o(load());
            auto pairs = o.enumerate_pairs(parse_w(o, wspec));
            if (json_out) std::cout << pairs_to_json(o, pairs) << "\n";
            else {
                for (auto& p : pairs) {
                    std::cout << "v:";
                    bool any = false;
                    for (int z = 0; z < o.modules(); ++z)
                        if (p.v[z]) {
                            std::cout << " " << o.root_key(z) << "=" << p.v[z];
                            any = true;
                        }
                    if (!any) std::cout << " 0";
                    std::cout << "\n";
                }
                std::cout << pairs.size() << " pairs\n";
            }
        } else if (dform_cmd->parsed()) {
            IQuiver q = load();
            OrbitQuiver o(q);
            GrothRing ring(o, CaseCatalog::standard(o));
            int fails = 0;
            for (auto [i, j] : o.arrow_pairs()) {
                DimPair vij = o.canonical_vij(i, j), vi = o.canonical_v(i), vj = o.canonical_v(j);
                IntVec ei = o.zero_w(), ej = o.zero_w();
                ei[i] = 1;
                ej[j] = 1;
                bool rii = q.rho[i] == i, rjj = q.rho[j] == j;
                DimPair pij_i{vij.v, ei}, z_j{o.zero_v(), ej}, z_i{o.zero_v(), ei};
                DimPair pij{vij.v, vij.w}, zw{o.zero_v(), vij.w};
                DimPair pi_w{vi.v, vij.w}, pi_i{vi.v, ei}, pj_j{vj.v, ej};
                struct Line { const char* name; long got, want; };
                std::vector<Line> lines = {
                    {"d((v_ij,1_i),(0,1_j))", ring.d_form(pij_i, z_j), 0},
                    {"d((0,1_j),(v_ij,1_i))", ring.d_form(z_j, pij_i), 1},
                    {"d((v_ij,1_i),(0,w_ij))", ring.d_form(pij_i, zw), 1},
                    {"d((0,w_ij),(v_ij,1_i))", ring.d_form(zw, pij_i), 1},
                    {"d((0,1_i),(v_ij,w_ij))", ring.d_form(z_i, pij), 0},
                    {"d((v_ij,w_ij),(0,1_i))", ring.d_form(pij, z_i), 1},
                    {"d((0,1_i),(v_i,w_ij))", ring.d_form(z_i, pi_w), rii ? 1 : 0},
                    {"d((v_i,w_ij),(0,1_i))", ring.d_form(pi_w, z_i), 1},
                    {"d((v_i,1_i),(0,w_ij))", ring.d_form(pi_i, zw), 1},
                    {"d((0,w_ij),(v_i,1_i))", ring.d_form(zw, pi_i), rii ? 2 : 1},
                    {"d((0,1_j),(v_ij,w_ij))", ring.d_form(z_j, pij), 1},
                    {"d((v_ij,w_ij),(0,1_j))", ring.d_form(pij, z_j), 0},
                    {"d((v_j,1_j),(0,w_ij))", ring.d_form(pj_j, zw), (rii || rjj) ? 2 : 1},
                    {"d((0,w_ij),(v_j,1_j))", ring.d_form(zw, pj_j), rjj ? 1 : 0},
                };
                if (rjj) {
                    DimPair diff{vj.v - vij.v, ej};
                    lines.push_back({"d((v_j-v_ij,1_j),(v_ij,w_ij))", ring.d_form(diff, pij), 1});
                    lines.push_back({"d((v_ij,w_ij),(v_j-v_ij,1_j))", ring.d_form(pij, diff), 1});
                }
                std::cout << "pair (" << i + 1 << "," << j + 1 << ")\n";
                for (auto& l : lines) {
                    bool ok = l.got == l.want;
                    std::cout << (ok ? "PASS " : "FAIL ") << l.name << " = " << l.got << "\n";
                    if (!ok) ++fails;
                }
            }
            return fails ? 1 : 0;
        } else if (mult_cmd->parsed()) {
            IQuiver q = load();
            OrbitQuiver o(q);
            CaseCatalog cat = catalog_path.empty() ? CaseCatalog::standard(o)
                                                   : catalog_from_json(o, slurp(catalog_path));
            GrothRing ring(o, cat);
            DimPair a{parse_v(o, left_v), parse_w(o, left_w)};
            DimPair b{parse_v(o, right_v), parse_w(o, right_w)};
            GElement g = ring.multiply(GElement::basis(a), GElement::basis(b));
            if (json_out) std::cout << gelement_to_json(o, g) << "\n";
            else std::cout << ring.str(g) << "\n";
        } else if (verify_cmd->parsed()) {
            IQuiver q = load();
            OrbitQuiver o(q);
            CaseCatalog cat = catalog_path.empty() ? CaseCatalog::standard(o)
                                                   : catalog_from_json(o, slurp(catalog_path));
            GrothRing ring(o, cat);
            int fails = 0;
            for (int i = 0; i < q.rank; ++i)
                for (int j = 0; j < q.rank; ++j) {
                    if (i == j) continue;
                    for (auto id : {"k-comm", "kB-comm", "BB-antisym", "BB-comm", "serre3", "iserre"}) {
                        if (!ring.relation_applies(id, i, j)) continue;
                        bool ok = false;
                        std::string detail;
                        try {
                            GElement r = ring.verify_relation(id, i, j);
                            ok = r.is_zero();
                            if (!ok) detail = ring.str(r);
                        } catch (const Error& e) {
                            detail = e.what();
                        }
                        std::cout << (ok ? "ZERO    " : "NONZERO ") << id << " (" << i + 1 << ","
                                  << j + 1 << ")";
                        if (!detail.empty()) std::cout << "  -- " << detail;
                        std::cout << "\n";
                        if (!ok) ++fails;
                    }
                }
            return fails ? 1 : 0;
        } else if (basis_cmd->parsed()) {
            IQuiver q = load();
            OrbitQuiver o(q);
            GrothRing ring(o, CaseCatalog::standard(o));
            IntVec w = parse_w(o, wspec);
            auto basis = ring.filtration_basis(w);
            for (auto& [plus, zero] : basis) {
                std::cout << "plus: w=";
                for (int t = 0; t < plus.w.size(); ++t) std::cout << plus.w[t] << (t + 1 < plus.w.size() ? "," : "");
                std::cout << " |v|=" << plus.v.sum() << "   zero: |v0|=" << zero.v.sum() << "\n";
            }
            std::cout << basis.size() << " basis elements, " << o.enumerate_pairs(w).size()
                      << " dominant pairs\n";
            return basis.size() == o.enumerate_pairs(w).size() ? 0 : 1;
        } else if (reduce_cmd->parsed()) {
            IQuiver q = load();
            OrbitQuiver o(q);
            GrothRing ring(o, CaseCatalog::standard(o));
            DimPair p{parse_v(o, vspec), parse_w(o, wspec)};
            std::vector<HalfLaurent> par(q.rank, HalfLaurent(1));
            if (!varsigma_spec.empty()) {
                std::stringstream ss(varsigma_spec);
                std::string part;
                int i = 0;
                while (std::getline(ss, part, ',')) par[i++] = parse_monomial(part);
            }
            for (auto& t : ring.reduce(GElement::basis(p), par)) {
                std::cout << "(" << t.coeff.str() << ")  plus-part |v|=" << t.plus.v.sum()
                          << "  residual k-exponents:";
                for (int i = 0; i < t.residual.size(); ++i) std::cout << " " << t.residual[i];
                std::cout << "\n";
            }
        } else if (cross_cmd->parsed()) {
            IQuiver q = load();
            OrbitQuiver o(q);
            RepOracle oracle(q);
            std::vector<std::string> log;
            int bad = oracle.crosscheck(o, &log);
            for (auto& s : log) std::cout << "MISMATCH " << s << "\n";
            std::cout << (bad ? "oracle mismatches: " : "oracle agrees: ") << bad << "\n";
            return bad ? 1 : 0;
        } else if (suite_cmd->parsed()) {
            std::cout << "seed " << seed << "\n";
            std::vector<IQuiver> qs;
            if (!quiver_path.empty()) qs.push_back(load());
            else qs = product_suite_quivers();
            return run_suite(qs, SEC_ALL, json_out);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code == "USAGE" ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
