#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "iqg/json_io.hpp"
#include "iqg/suite.hpp"

using namespace iqg;

TEST_CASE("euler form bilinearity and cartan symmetrization, random vectors") {
    std::mt19937 rng(20260808);  // seed printed by the CLI property runner
    std::uniform_int_distribution<int> dist(-4, 4);
    for (auto& q : all_ade_rank_le8()) {
        IntMat c = cartan_matrix(q.type, q.rank);
        for (int trial = 0; trial < 20; ++trial) {
            IntVec x(q.rank), y(q.rank), z(q.rank);
            for (int i = 0; i < q.rank; ++i) {
                x[i] = dist(rng);
                y[i] = dist(rng);
                z[i] = dist(rng);
            }
            CHECK(euler_form(q, x, y + z) == euler_form(q, x, y) + euler_form(q, x, z));
            CHECK(euler_form(q, x + z, y) == euler_form(q, x, y) + euler_form(q, z, y));
            long xcy = 0;
            for (int i = 0; i < q.rank; ++i)
                for (int j = 0; j < q.rank; ++j) xcy += (long)x[i] * c(i, j) * y[j];
            CHECK(euler_form(q, x, y) + euler_form(q, y, x) == xcy);
        }
    }
}

TEST_CASE("euler form depends on orientation, symmetrized form does not") {
    auto q1 = make_iquiver(DynkinType::A, 3, {{0, 1}, {1, 2}}, {0, 1, 2});
    auto q2 = make_iquiver(DynkinType::A, 3, {{1, 0}, {1, 2}}, {0, 1, 2});
    IntVec e0 = unit_vec(3, 0), e1 = unit_vec(3, 1);
    CHECK(euler_form(q1, e0, e1) != euler_form(q2, e0, e1));
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        IntVec x(3), y(3);
        for (int i = 0; i < 3; ++i) {
            x[i] = dist(rng);
            y[i] = dist(rng);
        }
        CHECK(sym_form(q1, x, y) == sym_form(q2, x, y));
    }
}

TEST_CASE("euler compatibility and AR duality across the hom family") {
    for (auto& q : hom_suite_quivers()) {
        if (q.rank > 5) continue;
        KnitTable k(q);
        for (auto x : k.module_objects())
            for (auto y : k.module_objects()) {
                CHECK(k.hom(x, y) - k.ext1(x, y) == euler_form(q, k.roots()[x.root], k.roots()[y.root]));
                bool projective = false;
                for (int i = 0; i < q.rank; ++i)
                    if (k.proj_root(i) == x.root) projective = true;
                if (!projective) CHECK(k.ext1(x, y) == k.hom(y, k.tau(x)));
                else CHECK(k.ext1(x, y) == 0);
            }
    }
}

TEST_CASE("orbit hom for other admissible functors") {
    auto q = make_iquiver(DynkinType::A, 2, {{0, 1}}, {0, 1});
    KnitTable k(q);
    int s1 = k.root_index(unit_vec(2, 0));
    // Sigma^2 orbit hom on modules is the plain module hom
    CHECK(k.hom_orbit({s1, 0}, {s1, 0}, OrbitFunctor::SigmaSq) == 1);
    // tau powers satisfy the projective vanishing here
    CHECK_NOTHROW(k.hom_orbit({s1, 0}, {s1, 0}, OrbitFunctor::TauPow, 3));
    CHECK_THROWS_AS(k.hom_orbit({s1, 0}, {s1, 0}, OrbitFunctor::TauPow, 0), Error);
}

TEST_CASE("window errors are loud") {
    auto q = make_iquiver(DynkinType::A, 2, {{0, 1}}, {0, 1});
    KnitTable k(q);
    CHECK_THROWS_WITH_AS(k.vertex_of(0, 1000), doctest::Contains("WINDOW_TOO_SMALL"), Error);
    CHECK_THROWS_AS(k.label(0, k.pmax() + 1), Error);
}

TEST_CASE("coassociativity of the twisted comultiplication") {
    for (auto& q : product_suite_quivers()) {
        OrbitQuiver o(q);
        GrothRing ring(o, CaseCatalog::standard(o));
        // grades |w| <= 3; compare both ways of iterating the comultiplication
        std::vector<IntVec> ws;
        IntVec w = o.zero_w();
        std::function<void(int, int)> gen = [&](int pos, int budget) {
            if (pos == q.rank) {
                if (w.sum() >= 3) ws.push_back(w);
                return;
            }
            for (int c = 0; c <= budget; ++c) {
                w[pos] = c;
                gen(pos + 1, budget - c);
            }
            w[pos] = 0;
        };
        gen(0, 3);
        int compared = 0;
        for (auto& grade_w : ws) {
            const auto& g = ring.transition(grade_w);
            // triple splits (wa, wb, wc), all nonzero
            std::vector<IntVec> parts;
            IntVec wa = o.zero_w();
            std::function<void(int)> rec = [&](int pos) {
                if (pos == q.rank) {
                    if (wa.sum() > 0 && wa.sum() < grade_w.sum()) parts.push_back(wa);
                    return;
                }
                for (int c = 0; c <= grade_w[pos]; ++c) {
                    wa[pos] = c;
                    rec(pos + 1);
                }
                wa[pos] = 0;
            };
            rec(0);
            for (auto& a : parts)
                for (auto& b : parts) {
                    IntVec rest = grade_w - a - b;
                    if ((rest.array() < 0).any() || rest.sum() == 0) continue;
                    for (size_t vi = 0; vi < g.pairs.size(); ++vi) {
                        // left: split (a, b+rest) refined by (b, rest)
                        auto l1 = g.deltaL.find(std::vector<int>(a.data(), a.data() + a.size()));
                        if (l1 == g.deltaL.end() || !l1->second[vi] || !l1->second[vi]->clean) continue;
                        IntVec absum = a + b;
                        auto ab = std::vector<int>(absum.data(), absum.data() + q.rank);
                        auto l2 = g.deltaL.find(ab);
                        if (l2 == g.deltaL.end() || !l2->second[vi] || !l2->second[vi]->clean) continue;
                        const auto& gb = ring.transition(b + rest);
                        const auto& gab = ring.transition(a + b);
                        std::map<std::tuple<int, int, int>, HalfLaurent> left, right;
                        bool usable = true;
                        for (auto& [cell, c] : l1->second[vi]->mat) {
                            auto it2 = gb.deltaL.find(std::vector<int>(b.data(), b.data() + q.rank));
                            if (it2 == gb.deltaL.end() || !it2->second[cell.second] ||
                                !it2->second[cell.second]->clean) {
                                usable = false;
                                break;
                            }
                            for (auto& [cell2, c2] : it2->second[cell.second]->mat)
                                left[std::make_tuple(cell.first, cell2.first, cell2.second)] += c * c2;
                        }
                        for (auto& [cell, c] : l2->second[vi]->mat) {
                            auto it2 = gab.deltaL.find(std::vector<int>(a.data(), a.data() + q.rank));
                            if (it2 == gab.deltaL.end() || !it2->second[cell.first] ||
                                !it2->second[cell.first]->clean) {
                                usable = false;
                                break;
                            }
                            for (auto& [cell2, c2] : it2->second[cell.first]->mat)
                                right[std::make_tuple(cell2.first, cell2.second, cell.second)] += c * c2;
                        }
                        if (!usable) continue;
                        for (auto it = left.begin(); it != left.end();)
                            it = it->second.is_zero() ? left.erase(it) : std::next(it);
                        for (auto it = right.begin(); it != right.end();)
                            it = it->second.is_zero() ? right.erase(it) : std::next(it);
                        CHECK(left == right);
                        ++compared;
                    }
                }
        }
        CHECK(compared > 0);
    }
}

TEST_CASE("filtered structure: products respect the plus-grade filtration") {
    auto q = make_iquiver(DynkinType::A, 3, {{0, 1}, {2, 1}}, {2, 1, 0});
    OrbitQuiver o(q);
    GrothRing ring(o, CaseCatalog::standard(o));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            DimPair a{o.zero_v(), o.zero_w()}, b{o.zero_v(), o.zero_w()};
            a.w[i] = 1;
            b.w[j] = 1;
            auto [pa, za] = o.decompose_pair(a);
            auto [pb, zb] = o.decompose_pair(b);
            IntVec bound = pa.w + pb.w;
            try {
                GElement g = ring.multiply(GElement::basis(a), GElement::basis(b));
                for (auto& [p, c] : g.terms()) {
                    auto [pp, zz] = o.decompose_pair(p);
                    CHECK(leq(pp.w, bound));
                }
            } catch (const Error&) {
            }
        }
}

TEST_CASE("klr dimension of finite projective dimension classes") {
    auto q = make_iquiver(DynkinType::A, 3, {{0, 1}, {2, 1}}, {2, 1, 0});
    OrbitQuiver o(q);
    IntVec a = IntVec::Zero(3);
    CHECK(o.klr_dim(a).v.sum() == 0);
    a[0] = 1;
    auto k1 = o.klr_dim(a);
    CHECK(k1.v == o.canonical_v(0).v);
    CHECK(k1.w == o.canonical_v(0).w);
    a[1] = 1;
    auto k2 = o.klr_dim(a);
    CHECK(k2.v == o.canonical_v(0).v + o.canonical_v(1).v);
    IntVec neg = IntVec::Zero(3);
    neg[0] = -1;
    CHECK_THROWS_AS(o.klr_dim(neg), Error);
}

TEST_CASE("json round trips") {
    for (auto& q : product_suite_quivers()) {
        IQuiver back = quiver_from_json(quiver_to_json(q));
        CHECK(back.type == q.type);
        CHECK(back.rank == q.rank);
        CHECK(back.arrows == q.arrows);
        CHECK(back.rho == q.rho);
    }
}

TEST_CASE("reduce validates parameters") {
    auto q = make_iquiver(DynkinType::A, 3, {{0, 1}, {2, 1}}, {2, 1, 0});
    OrbitQuiver o(q);
    GrothRing ring(o, CaseCatalog::standard(o));
    std::vector<HalfLaurent> bad(3, HalfLaurent(1));
    bad[0] = HalfLaurent(2);  // differs from varsigma at rho(0)=2
    CHECK_THROWS_WITH_AS(ring.reduce(GElement::unit(o), bad), doctest::Contains("INVALID_PARAMETERS"),
                         Error);
    std::vector<HalfLaurent> zero(3, HalfLaurent(0));
    CHECK_THROWS_AS(ring.reduce(GElement::unit(o), zero), Error);
}

TEST_CASE("underdetermined grades are reported, not guessed") {
    // the split rank-1 double grade has a transition the constraints do not pin
    auto q = make_iquiver(DynkinType::A, 1, {}, {0});
    OrbitQuiver o(q);
    GrothRing ring(o, CaseCatalog::standard(o));
    IntVec w = o.zero_w();
    w[0] = 2;
    const auto& t = ring.transition(w);
    CHECK(t.pairs.size() == 2);
    CHECK(t.status == SolveStatus::Underdetermined);
    DimPair e{o.zero_v(), o.zero_w()};
    e.w[0] = 1;
    CHECK_THROWS_WITH_AS(ring.multiply(GElement::basis(e), GElement::basis(e)),
                         doctest::Contains("SOLVER_UNDERDETERMINED"), Error);
}

TEST_CASE("Happel labels: one shift-zero vertex per root") {
    for (auto& q : hom_suite_quivers()) {
        KnitTable k(q);
        int count = 0;
        for (int p = k.pmin(); p <= k.pmax(); ++p)
            for (int i = 0; i < q.rank; ++i)
                if (k.label(i, p).shift == 0) ++count;
        CHECK(count == (int)k.roots().size());
    }
}

TEST_CASE("projectives never meet their own orbit translates") {
    for (auto& q : product_suite_quivers()) {
        KnitTable k(q);
        for (int i = 0; i < q.rank; ++i) {
            DerivedObject p{k.proj_root(i), 0};
            DerivedObject img = p;
            for (int n = 1; n <= 2 * k.coxeter(); ++n) {
                img = k.sigma_rho(img);
                CHECK(k.hom(p, img) == 0);
            }
        }
    }
}

TEST_CASE("vij requires an arrow") {
    auto q = make_iquiver(DynkinType::A, 3, {{0, 1}, {1, 2}}, {0, 1, 2});
    OrbitQuiver o(q);
    CHECK_THROWS_WITH_AS(o.canonical_vij(0, 2), doctest::Contains("NO_ARROW"), Error);
    CHECK_THROWS_AS(o.canonical_vij(0, 1), Error);  // arrow points the other way
    CHECK_NOTHROW(o.canonical_vij(1, 0));
}

TEST_CASE("decompose rejects non-dominant pairs") {
    auto q = make_iquiver(DynkinType::A, 1, {}, {0});
    OrbitQuiver o(q);
    DimPair p{o.zero_v(), o.zero_w()};
    p.v[0] = 1;
    p.w[0] = 1;
    CHECK_THROWS_WITH_AS(o.decompose_pair(p), doctest::Contains("NOT_L_DOMINANT"), Error);
}
