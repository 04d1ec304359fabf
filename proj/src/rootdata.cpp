#include "iqg/rootdata.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace iqg {

char type_letter(DynkinType t) {
    switch (t) {
        case DynkinType::A: return 'A';
        case DynkinType::D: return 'D';
        default: return 'E';
    }
}

DynkinType type_from_letter(char c) {
    switch (c) {
        case 'A': case 'a': return DynkinType::A;
        case 'D': case 'd': return DynkinType::D;
        case 'E': case 'e': return DynkinType::E;
        default: throw Error("NOT_DYNKIN", std::string("unknown type letter ") + c);
    }
}

std::vector<std::pair<int, int>> dynkin_edges(DynkinType type, int rank) {
    std::vector<std::pair<int, int>> e;
    switch (type) {
        case DynkinType::A:
            if (rank < 1) throw Error("NOT_DYNKIN", "A_n needs n >= 1");
            for (int i = 0; i + 1 < rank; ++i) e.push_back({i, i + 1});
            break;
        case DynkinType::D:
            if (rank < 4) throw Error("NOT_DYNKIN", "D_n needs n >= 4");
            for (int i = 0; i + 2 < rank; ++i) e.push_back({i, i + 1});
            e.push_back({rank - 3, rank - 1});
            break;
        case DynkinType::E:
            if (rank < 6 || rank > 8) throw Error("NOT_DYNKIN", "E_n needs n in {6,7,8}");
            // Bourbaki: chain 1-3-4-5-...-n, node 2 attached to 4
            e.push_back({0, 2});
            for (int i = 2; i + 1 < rank; ++i) e.push_back({i, i + 1});
            e.push_back({1, 3});
            break;
    }
    return e;
}

int coxeter_number(DynkinType type, int rank) {
    switch (type) {
        case DynkinType::A: return rank + 1;
        case DynkinType::D: return 2 * rank - 2;
        default:
            if (rank == 6) return 12;
            if (rank == 7) return 18;
            return 30;
    }
}

int positive_root_count(DynkinType type, int rank) {
    switch (type) {
        case DynkinType::A: return rank * (rank + 1) / 2;
        case DynkinType::D: return rank * (rank - 1);
        default:
            if (rank == 6) return 36;
            if (rank == 7) return 63;
            return 120;
    }
}

IntMat cartan_matrix(DynkinType type, int rank) {
    IntMat c = 2 * IntMat::Identity(rank, rank);
    for (auto& [a, b] : dynkin_edges(type, rank)) {
        c(a, b) -= 1;
        c(b, a) -= 1;
    }
    return c;
}

IQuiver make_iquiver(DynkinType type, int rank, std::vector<std::pair<int, int>> arrows,
                     std::vector<int> rho) {
    // underlying graph must be exactly the Dynkin edge set
    auto edges = dynkin_edges(type, rank);
    std::multiset<std::pair<int, int>> want(edges.begin(), edges.end());
    std::multiset<std::pair<int, int>> got;
    for (auto [a, b] : arrows) {
        if (a < 0 || a >= rank || b < 0 || b >= rank || a == b)
            throw Error("NOT_DYNKIN", "arrow endpoints out of range");
        got.insert({std::min(a, b), std::max(a, b)});
    }
    if (got != want) throw Error("NOT_DYNKIN", "arrow set is not an orientation of the diagram");

    // trees cannot have directed cycles, but reject duplicated arrows anyway
    std::set<std::pair<int, int>> uniq(arrows.begin(), arrows.end());
    if (uniq.size() != arrows.size()) throw Error("CYCLIC_ORIENTATION", "duplicated arrow");

    if ((int)rho.size() != rank) throw Error("INVALID_INVOLUTION", "wrong involution length");
    for (int i = 0; i < rank; ++i) {
        if (rho[i] < 0 || rho[i] >= rank || rho[rho[i]] != i)
            throw Error("INVALID_INVOLUTION", "not an involution");
    }
    for (auto [a, b] : arrows) {
        if (!uniq.count({rho[a], rho[b]}))
            throw Error("INVALID_INVOLUTION", "involution does not preserve arrows");
    }

    IQuiver q;
    q.type = type;
    q.rank = rank;
    q.arrows = std::move(arrows);
    q.rho = std::move(rho);
    return q;
}

long euler_form(const IQuiver& q, const IntVec& x, const IntVec& y) {
    if (x.size() != q.rank || y.size() != q.rank)
        throw Error("DIMENSION_MISMATCH", "vector length != rank");
    long s = 0;
    for (int i = 0; i < q.rank; ++i) s += (long)x[i] * y[i];
    for (auto& [a, b] : q.arrows) s -= (long)x[a] * y[b];
    return s;
}

long antisym_form(const IQuiver& q, const IntVec& x, const IntVec& y) {
    return euler_form(q, x, y) - euler_form(q, y, x);
}

long sym_form(const IQuiver& q, const IntVec& x, const IntVec& y) {
    return euler_form(q, x, y) + euler_form(q, y, x);
}

IntVec apply_rho(const IQuiver& q, const IntVec& x) {
    IntVec y(q.rank);
    for (int i = 0; i < q.rank; ++i) y[i] = x[q.rho[i]];
    return y;
}

IntVec unit_vec(int n, int i) {
    IntVec e = IntVec::Zero(n);
    e[i] = 1;
    return e;
}

namespace {
struct VecLess {
    bool operator()(const IntVec& a, const IntVec& b) const {
        for (int i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
};
}  // namespace

std::vector<IntVec> positive_roots(const IQuiver& q) {
    IntMat c = cartan_matrix(q.type, q.rank);
    std::set<IntVec, VecLess> roots;
    std::vector<IntVec> queue;
    for (int i = 0; i < q.rank; ++i) {
        IntVec e = unit_vec(q.rank, i);
        roots.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        IntVec x = queue.back();
        queue.pop_back();
        for (int i = 0; i < q.rank; ++i) {
            long pairing = 0;
            for (int j = 0; j < q.rank; ++j) pairing += (long)c(i, j) * x[j];
            IntVec y = x;
            y[i] -= (int)pairing;
            if ((y.array() >= 0).all() && y.sum() > 0 && !roots.count(y)) {
                roots.insert(y);
                queue.push_back(y);
            }
        }
    }
    return std::vector<IntVec>(roots.begin(), roots.end());
}

std::vector<std::vector<int>> admissible_involutions(
    DynkinType type, int rank, const std::vector<std::pair<int, int>>& arrows) {
    std::vector<std::vector<int>> candidates;
    std::vector<int> id(rank);
    for (int i = 0; i < rank; ++i) id[i] = i;
    candidates.push_back(id);
    auto swap2 = [&](int a, int b) {
        auto p = id;
        std::swap(p[a], p[b]);
        return p;
    };
    if (type == DynkinType::A && rank >= 2) {
        std::vector<int> f(rank);
        for (int i = 0; i < rank; ++i) f[i] = rank - 1 - i;
        candidates.push_back(f);
    } else if (type == DynkinType::D) {
        candidates.push_back(swap2(rank - 2, rank - 1));
        if (rank == 4) {  // the two other leg swaps of D4
            candidates.push_back(swap2(0, 2));
            candidates.push_back(swap2(0, 3));
        }
    } else if (type == DynkinType::E && rank == 6) {
        // Bourbaki E6 flip: 1<->6, 3<->5 (0-based: 0<->5, 2<->4)
        auto f = id;
        std::swap(f[0], f[5]);
        std::swap(f[2], f[4]);
        candidates.push_back(f);
    }
    std::set<std::pair<int, int>> uniq(arrows.begin(), arrows.end());
    std::vector<std::vector<int>> ok;
    for (auto& p : candidates) {
        bool good = true;
        for (auto [a, b] : arrows)
            if (!uniq.count({p[a], p[b]})) { good = false; break; }
        if (good) ok.push_back(p);
    }
    return ok;
}

}  // namespace iqg
