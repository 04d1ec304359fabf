// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <iostream>
#include <sstream>

#include "iqg/json_io.hpp"
#include "iqg/suite.hpp"

using namespace iqg;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int num, const std::string& name, bool pass, double seconds, double limit,
            const std::string& detail = "") {
    bool in_time = limit <= 0 || seconds <= limit;
    std::ostringstream os;
    os << (pass && in_time ? "PASS" : "FAIL") << "  [" << num << "] " << name << "  ("
       << (int)(seconds * 1000) << " ms";
    if (limit > 0) os << ", limit " << (int)(limit * 1000) << " ms";
    os << ")";
    if (!detail.empty()) os << "  -- " << detail;
    std::cout << os.str() << std::endl;
    if (!(pass && in_time)) ++failures;
}

double secs(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::duration<double>>(Clock::now() - t0).count();
}

bool suite_ok(const std::vector<IQuiver>& qs, unsigned sections, std::string* why,
              const char* prefix = nullptr) {
    for (auto& q : qs) {
        for (auto& r : run_fixture_suite(q, sections)) {
            if (prefix && r.name.rfind(prefix, 0) != 0) continue;
            if (!r.pass) {
                if (why) *why = quiver_tag(q) + ": " + r.name + " " + r.detail;
                return false;
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    // 1. Cartan/Euler over every ADE diagram of rank <= 8
    {
        auto t0 = Clock::now();
        bool ok = true;
        std::string why;
        for (auto& q : all_ade_rank_le8()) {
            IntMat c = cartan_matrix(q.type, q.rank);
            for (int i = 0; i < q.rank && ok; ++i)
                for (int j = 0; j < q.rank; ++j)
                    if (sym_form(q, unit_vec(q.rank, i), unit_vec(q.rank, j)) != c(i, j)) {
                        ok = false;
                        why = quiver_tag(q);
                        break;
                    }
            if ((int)positive_roots(q).size() != positive_root_count(q.type, q.rank)) {
                ok = false;
                why = quiver_tag(q) + " root count";
            }
        }
        report(1, "symmetrized Euler form equals the Cartan matrix, ADE rank <= 8", ok, secs(t0), 1.0,
               why);
    }

    auto homset = hom_suite_quivers();

    // 2. canonical vector values over the hom suite
    {
        auto t0 = Clock::now();
        std::string why;
        bool ok = suite_ok(homset, SEC_HOM, &why);
        report(2, "canonical hom values v^i on the A/D quiver family", ok, secs(t0), 5.0, why);
    }
    // 3. vanishing slack of (v^i, w^i)
    {
        auto t0 = Clock::now();
        std::string why;
        bool ok = suite_ok(homset, SEC_HOM, &why, "sigma* w^i");
        report(3, "sigma* w^i - C_q v^i vanishes on the same family", ok, secs(t0), 5.0, why);
    }
    // 4. dominant pair classifications
    {
        auto t0 = Clock::now();
        std::string why;
        bool ok = suite_ok(homset, SEC_VIJ | SEC_PAIRS, &why);
        report(4, "dominant pair classification at w^i, w^{ij}, w^{ijj} and no-arrow triples", ok,
               secs(t0), 30.0, why);
    }
    // 5. d-form identities
    {
        auto t0 = Clock::now();
        std::string why;
        bool ok = suite_ok(homset, SEC_DFORM, &why);
        report(5, "the ten d-form identities at every arrow pair", ok, secs(t0), 10.0, why);
    }
    // 6. product tables on the rank-2 families
    {
        auto t0 = Clock::now();
        std::string why;
        bool ok = suite_ok(product_suite_quivers(), SEC_PRODUCTS, &why);
        report(6, "rank-2 product tables, coefficient for coefficient", ok, secs(t0), 60.0, why);
    }
    // 7. relation suite
    {
        auto t0 = Clock::now();
        std::string why;
        bool ok = suite_ok(relation_suite_quivers(), SEC_RELATIONS, &why);
        report(7, "defining relations hold on A_n (n<=4, all involutions) and split D4", ok, secs(t0),
               120.0, why);
    }
    // 8. filtration basis vs dominant pairs, |w| <= 3, and recomposition
    {
        auto t0 = Clock::now();
        std::string why;
        bool ok = suite_ok(product_suite_quivers(), SEC_BASIS, &why);
        // recomposition identity
        for (auto& q : product_suite_quivers()) {
            OrbitQuiver o(q);
            for (int i = 0; i < q.rank && ok; ++i) {
                IntVec w = o.canonical_v(i).w;
                w[(i + 1) % q.rank] += 1;
                for (auto& p : o.enumerate_pairs(w)) {
                    auto [plus, zero] = o.decompose_pair(p);
                    if (!(plus.v + zero.v == p.v && plus.w + zero.w == p.w)) {
                        ok = false;
                        why = quiver_tag(q) + " recomposition";
                    }
                }
            }
        }
        report(8, "filtration basis counts match and decomposition recomposes", ok, secs(t0), 30.0,
               why);
    }
    // 9. positivity of every structure constant computed in 6-7
    {
        auto t0 = Clock::now();
        std::string why;
        bool ok = true;
        for (auto& q : product_suite_quivers()) {
            OrbitQuiver o(q);
            GrothRing ring(o, CaseCatalog::standard(o));
            std::vector<GElement> gens;
            for (int i = 0; i < q.rank; ++i) {
                DimPair e{o.zero_v(), o.zero_w()};
                e.w[i] = 1;
                gens.push_back(GElement::basis(e));
                gens.push_back(GElement::basis(o.canonical_v(i)));
            }
            for (auto& x : gens)
                for (auto& y : gens) {
                    try {
                        GElement g = ring.multiply(x, y);
                        for (auto& [p, c] : g.terms())
                            if (!c.nonneg()) {
                                ok = false;
                                why = quiver_tag(q) + ": negative structure constant";
                            }
                    } catch (const Error&) {
                    }
                }
        }
        report(9, "computed structure constants are nonnegative", ok, secs(t0), 60.0, why);
    }
    // 10. functor orders and the table of cyclic cases
    {
        auto t0 = Clock::now();
        std::string why;
        bool ok = true;
        std::string recorded;
        struct Row {
            IQuiver q;
            int expect;  // -1: record only
        };
        std::vector<Row> rows;
        rows.push_back({make_iquiver(DynkinType::A, 3, {{0, 1}, {2, 1}}, {2, 1, 0}), 2});
        rows.push_back(
            {make_iquiver(DynkinType::A, 5, {{0, 1}, {2, 1}, {2, 3}, {4, 3}}, {4, 3, 2, 1, 0}), 3});
        rows.push_back(
            {make_iquiver(DynkinType::E, 6, {{0, 2}, {2, 3}, {5, 4}, {4, 3}, {3, 1}}, {5, 1, 4, 3, 2, 0}),
             6});
        {
            std::vector<int> id7 = {0, 1, 2, 3, 4, 5, 6};
            rows.push_back({make_iquiver(DynkinType::E, 7, dynkin_edges(DynkinType::E, 7), id7), 9});
            std::vector<int> id8 = {0, 1, 2, 3, 4, 5, 6, 7};
            rows.push_back({make_iquiver(DynkinType::E, 8, dynkin_edges(DynkinType::E, 8), id8), 15});
            std::vector<int> id4 = {0, 1, 2, 3};
            rows.push_back({make_iquiver(DynkinType::D, 4, dynkin_edges(DynkinType::D, 4), id4), -1});
            std::vector<int> id5 = {0, 1, 2, 3, 4};
            rows.push_back({make_iquiver(DynkinType::D, 5, dynkin_edges(DynkinType::D, 5), id5), -1});
        }
        for (auto& r : rows) {
            KnitTable k(r.q);
            auto ord = k.sigma_rho_order();
            // the square is always tau^{-h}
            for (auto x : k.module_objects()) {
                auto lhs = k.sigma_rho(k.sigma_rho(x));
                auto rhs = x;
                for (int m = 0; m < k.coxeter(); ++m) rhs = k.tau_inv(rhs);
                if (!(lhs == rhs)) {
                    ok = false;
                    why = quiver_tag(r.q) + " square law";
                }
            }
            if (r.expect > 0 && (!ord.pure || ord.power != r.expect)) {
                ok = false;
                why = quiver_tag(r.q) + " order mismatch";
            }
            if (r.expect < 0) {
                std::ostringstream os;
                os << type_letter(r.q.type) << r.q.rank << ": tau^{-" << ord.power << "}"
                   << (ord.pure ? "" : " * swap") << "; ";
                recorded += os.str();
            }
        }
        // square law across the full hom family as well
        for (auto& q : homset) {
            KnitTable k(q);
            for (auto x : k.module_objects()) {
                auto lhs = k.sigma_rho(k.sigma_rho(x));
                auto rhs = x;
                for (int m = 0; m < k.coxeter(); ++m) rhs = k.tau_inv(rhs);
                if (!(lhs == rhs)) {
                    ok = false;
                    why = quiver_tag(q) + " square law";
                }
            }
        }
        report(10, "functor orders match the cyclic table; D_n value recorded", ok, secs(t0), 30.0,
               why.empty() ? recorded : why);
    }
    // 11. oracle cross-check
    {
        auto t0 = Clock::now();
        std::string why;
        bool ok = true;
        for (auto& q : homset) {
            if (q.rank > 4 || (q.type == DynkinType::D && q.rank > 4)) continue;
            OrbitQuiver o(q);
            RepOracle oracle(q);
            std::vector<std::string> log;
            if (oracle.crosscheck(o, &log) != 0) {
                ok = false;
                why = quiver_tag(q) + (log.empty() ? "" : ": " + log.front());
            }
        }
        report(11, "mesh calculus equals the linear-algebra oracle on A_n (n<=4) and D4", ok, secs(t0),
               120.0, why);
    }

    std::cout << (failures ? "ACCEPTANCE: FAILED " : "ACCEPTANCE: PASSED ") << (11 - failures)
              << "/11" << std::endl;
    return failures ? 1 : 0;
}
