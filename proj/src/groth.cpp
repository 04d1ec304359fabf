#include "iqg/groth.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace iqg {

GrothRing::GrothRing(const OrbitQuiver& orbit, CaseCatalog catalog, std::string cache_dir)
    : o_(orbit), cat_(std::move(catalog)), cache_dir_(std::move(cache_dir)) {
    if (cache_dir_.empty()) {
        const char* env = std::getenv("IQG_CACHE_DIR");
        if (env) cache_dir_ = env;
    }
}

int GrothRing::Grade::index_of(const IntVec& v) const {
    for (int i = 0; i < (int)pairs.size(); ++i)
        if (pairs[i].v == v) return i;
    return -1;
}

std::vector<int> GrothRing::key(const IntVec& w) {
    return std::vector<int>(w.data(), w.data() + w.size());
}

long GrothRing::d_form(const DimPair& a, const DimPair& b) const {
    IntVec sl = o_.slack(a);
    IntVec tb = o_.tau_star(b.v);
    long s = 0;
    for (int z = 0; z < o_.modules(); ++z) s += (long)sl[z] * tb[z];
    IntVec sw = o_.sigma_star(b.w);
    for (int z = 0; z < o_.modules(); ++z) s += (long)a.v[z] * sw[z];
    return s;
}

int GrothRing::twist_u(const IntVec& w1, const IntVec& w2) const {
    // v^{-(1/2) <w1,w2>_a}: one u-unit per antisymmetric-form unit
    return (int)-antisym_form(o_.quiver(), w1, w2);
}

bool GrothRing::flow_vanish(const IntVec& v, const IntVec& w) const {
    if (v.sum() == 0) return false;
    if (w.sum() == 0) return true;  // stability needs a frozen socle
    // modules are contravariant: a section at z escapes the socle through the
    // in-arrows of z, i.e. into modules y -> z or into the frozen sigma S_k -> z
    for (int z = 0; z < o_.modules(); ++z) {
        if (v[z] == 0) continue;
        bool escapes = false;
        for (auto& [y, m] : o_.arrows_into()[z])
            if (v[y] > 0) { escapes = true; break; }
        if (!escapes) {
            for (int k = 0; k < o_.quiver().rank; ++k)
                if (o_.simple_vertex(k) == z && w[k] > 0) { escapes = true; break; }
        }
        if (!escapes) return true;
    }
    return false;
}

GrothRing::PiExpansion GrothRing::resolve_pi(const IntVec& v, const IntVec& w) {
    PiExpansion out;
    if (v.sum() == 0) {
        const Grade& g = transition(w);
        int idx = g.index_of(v);
        if (idx < 0) return out;
        out.ok = true;
        out.terms = {{idx, HalfLaurent(1)}};
        return out;
    }
    if (w.sum() == 0) {  // no frozen support: only the zero module is stable
        out.ok = true;
        return out;
    }
    {
        const Grade& g = transition(w);
        int idx = g.index_of(v);
        if (idx >= 0) {
            if (g.status == SolveStatus::Underdetermined) {
                for (auto& [r, c] : g.free_entries)
                    if (r == idx) return out;  // row has free entries
            }
            out.ok = true;
            out.clean = !g.row_modeled[idx];
            for (int j = 0; j <= idx; ++j)
                if (!g.a[idx][j].is_zero()) out.terms.push_back({j, g.a[idx][j]});
            return out;
        }
    }
    if (auto res = cat_.lookup(v, w)) {
        if (res->kind == CaseCatalog::Resolution::Zero) {
            out.ok = true;
            return out;
        }
        return resolve_pi(res->v2, w);
    }
    if (flow_vanish(v, w)) {
        out.ok = true;
        return out;
    }
    return out;  // not resolvable
}

std::vector<IntVec> GrothRing::proper_splits(const IntVec& w) const {
    std::vector<IntVec> out;
    int n = (int)w.size();
    IntVec cur = IntVec::Zero(n);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            if (cur.sum() > 0 && cur.sum() < w.sum()) out.push_back(cur);
            return;
        }
        for (int c = 0; c <= w[pos]; ++c) {
            cur[pos] = c;
            rec(pos + 1);
        }
        cur[pos] = 0;
    };
    rec(0);
    return out;
}

// clean = every term of the expansion resolved; otherwise unresolved factors
// were dropped, which is the model behind the rank-2 case analysis
GrothRing::Row GrothRing::comult_pi(const IntVec& v, const IntVec& w, const IntVec& w1) {
    IntVec w2 = w - w1;
    int tw = twist_u(w1, w2);
    Row row;
    row.clean = true;
    // iterate over all splits v = v1 + v2
    int nz = o_.modules();
    IntVec v1 = IntVec::Zero(nz);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == nz) {
            IntVec v2 = v - v1;
            DimPair p1{v1, w1}, p2{v2, w2};
            auto e1 = resolve_pi(v1, w1);
            auto e2 = resolve_pi(v2, w2);
            // a term dies as soon as one factor is known to vanish; factors
            // the case analysis cannot see are dropped and the row is marked
            // as model-dependent
            if (e1.ok && e1.terms.empty()) return;
            if (e2.ok && e2.terms.empty()) return;
            if (!e1.ok || !e2.ok) {
                row.clean = false;
                return;
            }
            if (!e1.clean || !e2.clean) row.clean = false;
            long dd = d_form(p2, p1) - d_form(p1, p2);
            HalfLaurent c = HalfLaurent::u_pow(tw + 2 * (int)dd);
            for (auto& [i1, c1] : e1.terms)
                for (auto& [i2, c2] : e2.terms) {
                    HalfLaurent add = c * c1 * c2;
                    auto key = std::make_pair(i1, i2);
                    auto it = row.mat.find(key);
                    if (it == row.mat.end()) row.mat[key] = add;
                    else {
                        it->second += add;
                        if (it->second.is_zero()) row.mat.erase(it);
                    }
                }
            return;
        }
        for (int c = 0; c <= v[pos]; ++c) {
            v1[pos] = c;
            rec(pos + 1);
        }
        v1[pos] = 0;
    };
    rec(0);
    return row;
}

const GrothRing::Grade& GrothRing::transition(const IntVec& w) {
    std::lock_guard<std::recursive_mutex> lock(mtx_);
    auto k = key(w);
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    Grade g;
    g.w = w;
    g.pairs = o_.enumerate_pairs(w);
    if (!load_grade(g)) {
        solve(g);
        save_grade(g);
    }
    return cache_.emplace(k, std::move(g)).first->second;
}

namespace {
nlohmann::json laurent_to_json(const HalfLaurent& h) {
    nlohmann::json a = nlohmann::json::array();
    for (auto& [k, c] : h.coeffs()) a.push_back({k, c});
    return a;
}

HalfLaurent laurent_from_json(const nlohmann::json& a) {
    HalfLaurent h;
    for (auto& t : a) h.add_term(t.at(0).get<int>(), t.at(1).get<long long>());
    return h;
}
}  // namespace

std::string GrothRing::cache_path(const IntVec& w) const {
    std::ostringstream os;
    os << cache_dir_ << "/grade";
    for (int i = 0; i < w.size(); ++i) os << "_" << w[i];
    // distinguish quivers sharing a rank
    os << "_q";
    for (auto& [a, b] : o_.quiver().arrows) os << a << b;
    for (int r : o_.quiver().rho) os << r;
    os << ".json";
    return os.str();
}

bool GrothRing::load_grade(Grade& g) const {
    if (cache_dir_.empty()) return false;
    std::ifstream in(cache_path(g.w));
    if (!in) return false;
    nlohmann::json j;
    try {
        in >> j;
        size_t np = g.pairs.size();
        if (j.at("pairs").get<size_t>() != np) return false;
        g.status = j.at("status").get<std::string>() == "unique" ? SolveStatus::Unique
                                                                 : SolveStatus::Underdetermined;
        g.a.assign(np, std::vector<HalfLaurent>(np));
        for (auto& e : j.at("a"))
            g.a[e.at(0).get<int>()][e.at(1).get<int>()] = laurent_from_json(e.at(2));
        g.row_modeled.assign(np, false);
        for (auto& e : j.at("modeled")) g.row_modeled[e.get<int>()] = true;
        for (auto& e : j.at("free")) g.free_entries.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
        g.deltaL.clear();
        for (auto& e : j.at("deltaL")) {
            std::vector<int> wk = e.at("w1").get<std::vector<int>>();
            auto& rows = g.deltaL[wk];
            rows.assign(np, std::nullopt);
            for (auto& r : e.at("rows")) {
                Row row;
                row.clean = r.at("clean").get<bool>();
                for (auto& cell : r.at("mat"))
                    row.mat[{cell.at(0).get<int>(), cell.at(1).get<int>()}] =
                        laurent_from_json(cell.at(2));
                rows[r.at("idx").get<int>()] = std::move(row);
            }
        }
        return true;
    } catch (...) {
        return false;
    }
}

void GrothRing::save_grade(const Grade& g) const {
    if (cache_dir_.empty()) return;
    nlohmann::json j;
    j["pairs"] = g.pairs.size();
    j["status"] = g.status == SolveStatus::Unique ? "unique" : "underdetermined";
    j["a"] = nlohmann::json::array();
    for (size_t i = 0; i < g.pairs.size(); ++i)
        for (size_t k = 0; k <= i; ++k)
            if (!g.a[i][k].is_zero()) j["a"].push_back({i, k, laurent_to_json(g.a[i][k])});
    j["modeled"] = nlohmann::json::array();
    for (size_t i = 0; i < g.row_modeled.size(); ++i)
        if (g.row_modeled[i]) j["modeled"].push_back(i);
    j["free"] = nlohmann::json::array();
    for (auto& [r, c] : g.free_entries) j["free"].push_back({r, c});
    j["deltaL"] = nlohmann::json::array();
    for (auto& [wk, rows] : g.deltaL) {
        nlohmann::json e;
        e["w1"] = wk;
        e["rows"] = nlohmann::json::array();
        for (size_t idx = 0; idx < rows.size(); ++idx) {
            if (!rows[idx]) continue;
            nlohmann::json r;
            r["idx"] = idx;
            r["clean"] = rows[idx]->clean;
            r["mat"] = nlohmann::json::array();
            for (auto& [cell, c] : rows[idx]->mat)
                r["mat"].push_back({cell.first, cell.second, laurent_to_json(c)});
            e["rows"].push_back(r);
        }
        j["deltaL"].push_back(e);
    }
    std::ofstream out(cache_path(g.w));
    if (out) out << j.dump();
}

namespace {
// bar-invariant polynomials with nonnegative coefficients, degree <= K and
// coefficients <= B, enumerated for the bounded solver search
std::vector<HalfLaurent> bar_candidates(int K, int B) {
    std::vector<HalfLaurent> out;
    std::vector<int> m(K + 1, 0);
    std::function<void(int)> rec = [&](int k) {
        if (k == K + 1) {
            HalfLaurent h;
            if (m[0]) h.add_term(0, m[0]);
            for (int d = 1; d <= K; ++d)
                if (m[d]) {
                    h.add_term(d, m[d]);
                    h.add_term(-d, m[d]);
                }
            out.push_back(h);
            return;
        }
        for (int c = 0; c <= B; ++c) {
            m[k] = c;
            rec(k + 1);
        }
        m[k] = 0;
    };
    rec(0);
    return out;
}

bool dominated(const HalfLaurent& small, const HalfLaurent& big) {
    // small <= big coefficientwise
    return (big - small).nonneg();
}
}  // namespace

void GrothRing::solve(Grade& g) {
    int np = (int)g.pairs.size();
    g.a.assign(np, std::vector<HalfLaurent>(np));
    g.row_modeled.assign(np, false);
    for (int i = 0; i < np; ++i) g.a[i][i] = HalfLaurent(1);

    auto splits = proper_splits(g.w);
    for (auto& w1 : splits) g.deltaL[key(w1)].assign(np, std::nullopt);

    for (int idx = 0; idx < np; ++idx) {
        const DimPair& p = g.pairs[idx];
        // unknown columns: strictly smaller pairs under the entrywise order
        std::vector<int> unknowns;
        for (int j = 0; j < idx; ++j)
            if (leq(g.pairs[j].v, p.v) && g.pairs[j].v != p.v) unknowns.push_back(j);

        // per-split pushforward expansions; a split is usable once the rows
        // it depends on exist, and clean when nothing was modeled anywhere
        std::map<std::vector<int>, Row> dpi;
        std::vector<std::vector<int>> usable;
        std::map<std::vector<int>, bool> split_clean;
        for (auto& w1 : splits) {
            Row m = comult_pi(p.v, g.w, w1);
            bool deps_ok = true, deps_clean = true;
            for (int j : unknowns) {
                auto& dep = g.deltaL[key(w1)][j];
                if (!dep) { deps_ok = false; break; }
                if (!dep->clean) deps_clean = false;
            }
            if (!deps_ok) continue;
            split_clean[key(w1)] = m.clean && deps_clean;
            dpi[key(w1)] = std::move(m);
            usable.push_back(key(w1));
        }

        bool used_model = false;
        if (!unknowns.empty()) {
            // constraint slots: P - sum a_j Q_j >= 0 coefficientwise
            struct Slot {
                HalfLaurent P;
                std::vector<HalfLaurent> Q;  // one per unknown
            };
            auto collect = [&](bool clean_only) {
                std::vector<Slot> slots;
                for (auto& wk : usable) {
                    if (clean_only && !split_clean[wk]) continue;
                    std::set<std::pair<int, int>> cells;
                    for (auto& [cell, c] : dpi[wk].mat) cells.insert(cell);
                    for (int j : unknowns)
                        for (auto& [cell, c] : g.deltaL[wk][j]->mat) cells.insert(cell);
                    for (auto& cell : cells) {
                        Slot s;
                        auto pit = dpi[wk].mat.find(cell);
                        if (pit != dpi[wk].mat.end()) s.P = pit->second;
                        for (int j : unknowns) {
                            auto& dl = g.deltaL[wk][j]->mat;
                            auto qit = dl.find(cell);
                            s.Q.push_back(qit == dl.end() ? HalfLaurent() : qit->second);
                        }
                        slots.push_back(std::move(s));
                    }
                }
                return slots;
            };
            auto run = [&](const std::vector<Slot>& slots) {
                int K = 0;
                long B = 1;
                for (auto& s : slots) {
                    K = std::max({K, std::abs(s.P.min_deg()), std::abs(s.P.max_deg())});
                    for (auto& [deg, c] : s.P.coeffs()) B = std::max(B, (long)c);
                }
                auto candidates = bar_candidates(K, (int)B);
                std::vector<bool> pinned(unknowns.size(), false);
                for (size_t t = 0; t < unknowns.size(); ++t)
                    if (cat_.transition_zero(p.v, g.pairs[unknowns[t]].v, g.w)) pinned[t] = true;
                std::vector<HalfLaurent> assign(unknowns.size());
                std::vector<std::vector<HalfLaurent>> solutions;
                std::function<void(size_t)> search = [&](size_t uj) {
                    if (solutions.size() > 8) return;
                    for (auto& s : slots) {
                        HalfLaurent acc;
                        for (size_t t = 0; t < uj; ++t) acc += assign[t] * s.Q[t];
                        if (!dominated(acc, s.P)) return;
                    }
                    if (uj == unknowns.size()) {
                        solutions.push_back(assign);
                        return;
                    }
                    if (pinned[uj]) {
                        assign[uj] = HalfLaurent();
                        search(uj + 1);
                        return;
                    }
                    for (auto& c : candidates) {
                        assign[uj] = c;
                        search(uj + 1);
                    }
                    assign[uj] = HalfLaurent();
                };
                search(0);
                return solutions;
            };

            auto solutions = run(collect(true));
            if (solutions.size() != 1) {
                auto with_model = run(collect(false));
                if (!with_model.empty() && (solutions.empty() || with_model.size() < solutions.size())) {
                    solutions = with_model;
                    used_model = true;
                }
            }
            if (solutions.empty())
                throw Error("INFEASIBLE", "transition constraints are contradictory");
            for (size_t t = 0; t < unknowns.size(); ++t) g.a[idx][unknowns[t]] = solutions[0][t];
            if (solutions.size() > 1) {
                g.status = SolveStatus::Underdetermined;
                for (size_t t = 0; t < unknowns.size(); ++t) {
                    bool varies = false;
                    for (auto& sol : solutions)
                        if (sol[t] != solutions[0][t]) varies = true;
                    if (varies) g.free_entries.push_back({idx, unknowns[t]});
                }
            }
        }
        g.row_modeled[idx] = used_model;

        // Delta L rows for the splits that resolved
        bool row_free = false;
        for (auto& [r, c] : g.free_entries)
            if (r == idx) row_free = true;
        for (auto& wk : usable) {
            if (row_free) continue;
            SplitMat dl = dpi[wk].mat;
            for (int j : unknowns) {
                if (g.a[idx][j].is_zero()) continue;
                for (auto& [cell, c] : g.deltaL[wk][j]->mat) {
                    auto it2 = dl.find(cell);
                    HalfLaurent sub = g.a[idx][j] * c;
                    if (it2 == dl.end()) dl[cell] = -sub;
                    else {
                        it2->second -= sub;
                        if (it2->second.is_zero()) dl.erase(it2);
                    }
                }
            }
            for (auto& [cell, c] : dl)
                if (!c.nonneg())
                    throw Error("INFEASIBLE", "solved row is not positive");
            Row stored;
            stored.mat = std::move(dl);
            stored.clean = split_clean[wk] && !used_model;
            g.deltaL[wk][idx] = std::move(stored);
        }
    }
}

GElement GrothRing::multiply(const GElement& x, const GElement& y, bool allow_modeled) {
    GElement out;
    for (auto& [p1, c1] : x.terms()) {
        for (auto& [p2, c2] : y.terms()) {
            IntVec w = p1.w + p2.w;
            const Grade& g = transition(w);
            IntVec vsum = p1.v + p2.v;
            // leading term
            long dd = d_form(p2, p1) - d_form(p1, p2);
            HalfLaurent lead = HalfLaurent::u_pow(twist_u(p1.w, p2.w) + 2 * (int)dd);
            int lead_idx = g.index_of(vsum);
            if (lead_idx < 0) throw Error("INFEASIBLE", "product leading pair is not dominant");
            out.add(g.pairs[lead_idx], c1 * c2 * lead);
            // higher terms read off the comultiplication rows
            const Grade& g1 = transition(p1.w);
            const Grade& g2 = transition(p2.w);
            int i1 = g1.index_of(p1.v), i2 = g2.index_of(p2.v);
            if (i1 < 0 || i2 < 0) throw Error("NOT_L_DOMINANT", "factors must be basis classes");
            auto dlit = g.deltaL.find(key(p1.w));
            for (int k = 0; k < (int)g.pairs.size(); ++k) {
                if (!(leq(vsum, g.pairs[k].v)) || g.pairs[k].v == vsum) continue;
                if (dlit == g.deltaL.end() || !dlit->second[k] ||
                    (!allow_modeled && !dlit->second[k]->clean))
                    throw Error("SOLVER_UNDERDETERMINED",
                                "comultiplication row unavailable at the product grade");
                auto& mat = dlit->second[k]->mat;
                auto cit = mat.find({i1, i2});
                if (cit != mat.end()) out.add(g.pairs[k], c1 * c2 * cit->second);
            }
        }
    }
    return out;
}

Scaled GrothRing::multiply(const Scaled& x, const Scaled& y, bool allow_modeled) {
    Scaled r;
    r.g = multiply(x.g, y.g, allow_modeled);
    r.num = x.num * y.num;
    r.den = x.den * y.den;
    return r;
}

Scaled GrothRing::add(const Scaled& x, const Scaled& y) {
    Scaled r;
    r.g = (x.num * y.den) * x.g + (y.num * x.den) * y.g;
    r.num = HalfLaurent(1);
    r.den = x.den * y.den;
    return r;
}

Scaled GrothRing::multiply_word(const std::vector<Scaled>& factors) {
    if (factors.empty()) return Scaled{GElement::unit(o_), HalfLaurent(1), HalfLaurent(1)};
    // try association orders until every grade involved resolves; exact rows
    // are preferred and modeled rows are a fallback
    for (bool allow_modeled : {false, true}) {
        std::function<std::optional<Scaled>(int, int)> eval = [&](int lo,
                                                                  int hi) -> std::optional<Scaled> {
            if (lo == hi) return factors[lo];
            for (int mid = lo; mid < hi; ++mid) {
                auto l = eval(lo, mid);
                if (!l) continue;
                auto r = eval(mid + 1, hi);
                if (!r) continue;
                try {
                    return multiply(*l, *r, allow_modeled);
                } catch (const Error& e) {
                    if (e.code != "SOLVER_UNDERDETERMINED") throw;
                }
            }
            return std::nullopt;
        };
        auto res = eval(0, (int)factors.size() - 1);
        if (res) return *res;
    }
    throw Error("SOLVER_UNDERDETERMINED", "no association order resolves the word");
}

std::map<std::string, Scaled> GrothRing::kappa_images() {
    std::map<std::string, Scaled> img;
    const IQuiver& q = o_.quiver();
    for (int i = 0; i < q.rank; ++i) {
        bool representative = i <= q.rho[i];
        Scaled b;
        DimPair pe{o_.zero_v(), o_.zero_w()};
        pe.w[i] = 1;
        b.g = GElement::basis(pe);
        // v/(1-v^2) for representatives, v/(v^2-1) otherwise
        b.num = representative ? HalfLaurent::u_pow(2) : HalfLaurent::u_pow(2, -1);
        b.den = HalfLaurent(1) - HalfLaurent::u_pow(4);
        img["B" + std::to_string(i + 1)] = b;

        Scaled k;
        k.g = GElement::basis(o_.canonical_v(i));
        k.num = q.rho[i] == i ? HalfLaurent::u_pow(-2, -1) : HalfLaurent(1);
        k.den = HalfLaurent(1);
        img["k" + std::to_string(i + 1)] = k;
    }
    return img;
}

bool GrothRing::relation_applies(const std::string& id, int i, int j) const {
    const IQuiver& q = o_.quiver();
    if (id == "k-comm") return true;
    if (id == "kB-comm") return true;
    if (i == j) return false;
    int cij = -(q.arrows_between(i, j) + q.arrows_between(j, i));
    if (id == "BB-antisym") return q.rho[i] == j && i != j;
    if (id == "BB-comm") return cij == 0 && q.rho[i] != j;
    if (id == "serre3") return cij == -1 && q.rho[i] != i && q.rho[i] != j;
    if (id == "iserre") return cij == -1 && q.rho[i] == i;
    throw Error("UNKNOWN_RELATION", id);
}

GElement GrothRing::verify_relation(const std::string& id, int i, int j) {
    if (!relation_applies(id, i, j)) throw Error("NOT_APPLICABLE", id);
    auto img = kappa_images();
    auto B = [&](int t) { return img.at("B" + std::to_string(t + 1)); };
    auto Kt = [&](int t) { return img.at("k" + std::to_string(t + 1)); };
    const IQuiver& q = o_.quiver();
    auto scal = [&](const HalfLaurent& h) {
        return Scaled{GElement::unit(o_), h, HalfLaurent(1)};
    };
    Scaled lhs, rhs;
    if (id == "k-comm") {
        lhs = multiply_word({Kt(i), Kt(j)});
        rhs = multiply_word({Kt(j), Kt(i)});
    } else if (id == "kB-comm") {
        // k_i B_j = v^{c_{rho(i) j} - c_{ij}} B_j k_i
        IntMat c = cartan_matrix(q.type, q.rank);
        int e = c(q.rho[i], j) - c(i, j);
        lhs = multiply_word({Kt(i), B(j)});
        rhs = multiply_word({scal(HalfLaurent::u_pow(2 * e)), B(j), Kt(i)});
    } else if (id == "BB-antisym") {
        // (v - v^{-1})(B_{rho i} B_i - B_i B_{rho i}) = k_i - k_{rho i}
        HalfLaurent vmv = HalfLaurent::u_pow(2) - HalfLaurent::u_pow(-2);
        Scaled c1 = multiply_word({scal(vmv), B(q.rho[i]), B(i)});
        Scaled c2 = multiply_word({scal(-vmv), B(i), B(q.rho[i])});
        lhs = add(c1, c2);
        rhs = add(Kt(i), Scaled{HalfLaurent(-1) * Kt(q.rho[i]).g, Kt(q.rho[i]).num, Kt(q.rho[i]).den});
    } else if (id == "BB-comm") {
        lhs = multiply_word({B(i), B(j)});
        rhs = multiply_word({B(j), B(i)});
    } else if (id == "serre3" || id == "iserre") {
        HalfLaurent two = HalfLaurent::u_pow(2) + HalfLaurent::u_pow(-2);
        Scaled t0 = multiply_word({B(i), B(i), B(j)});
        Scaled t1 = multiply_word({scal(HalfLaurent(-1) * two), B(i), B(j), B(i)});
        Scaled t2 = multiply_word({B(j), B(i), B(i)});
        lhs = add(add(t0, t1), t2);
        if (id == "iserre") {
            rhs = multiply_word({scal(HalfLaurent::u_pow(2)), Kt(i), B(j)});
        } else {
            rhs = Scaled{GElement(), HalfLaurent(1), HalfLaurent(1)};
        }
    } else {
        throw Error("UNKNOWN_RELATION", id);
    }
    Scaled diff = add(lhs, Scaled{HalfLaurent(-1) * rhs.g, rhs.num, rhs.den});
    return diff.g;
}

std::vector<std::pair<DimPair, DimPair>> GrothRing::filtration_basis(const IntVec& w) const {
    std::vector<std::pair<DimPair, DimPair>> out;
    int n = o_.quiver().rank;
    std::vector<DimPair> vi(n);
    for (int i = 0; i < n; ++i) vi[i] = o_.canonical_v(i);
    std::vector<int> noninj;
    for (int z = 0; z < o_.modules(); ++z)
        if (!o_.is_injective(z)) noninj.push_back(z);

    IntVec a = IntVec::Zero(n);
    auto feasible = [&]() {
        for (int k = 0; k < n; ++k)
            if (a[k] + a[o_.quiver().rho[k]] > w[k]) return false;
        return true;
    };
    std::function<void(int)> rec_a = [&](int pos) {
        if (!feasible()) return;
        if (pos == n) {
            DimPair zero_part{o_.zero_v(), o_.zero_w()};
            for (int k = 0; k < n; ++k) {
                zero_part.v += a[k] * vi[k].v;
                zero_part.w += a[k] * vi[k].w;
            }
            IntVec wplus = w - zero_part.w;
            if (wplus.minCoeff() < 0) return;
            IntVec bound = o_.zero_v();
            for (int k = 0; k < n; ++k) bound += wplus[k] * vi[o_.quiver().rho[k]].v;
            IntVec vplus = o_.zero_v();
            IntVec sw = o_.sigma_star(wplus);
            std::function<void(size_t)> rec_v = [&](size_t zi) {
                if (zi == noninj.size()) {
                    if ((sw - o_.cq(vplus)).minCoeff() >= 0)
                        out.push_back({DimPair{vplus, wplus}, zero_part});
                    return;
                }
                int z = noninj[zi];
                for (int c = 0; c <= bound[z]; ++c) {
                    vplus[z] = c;
                    rec_v(zi + 1);
                }
                vplus[z] = 0;
            };
            rec_v(0);
            return;
        }
        for (int c = 0;; ++c) {
            a[pos] = c;
            if (!feasible()) break;
            rec_a(pos + 1);
        }
        a[pos] = 0;
    };
    rec_a(0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<GrothRing::ReducedTerm> GrothRing::reduce(const GElement& x,
                                                      const std::vector<HalfLaurent>& varsigma) {
    const IQuiver& q = o_.quiver();
    if ((int)varsigma.size() != q.rank) throw Error("INVALID_PARAMETERS", "need one parameter per vertex");
    IntMat c = cartan_matrix(q.type, q.rank);
    for (int i = 0; i < q.rank; ++i) {
        if (varsigma[i].is_zero()) throw Error("INVALID_PARAMETERS", "parameters must be invertible");
        if (c(i, q.rho[i]) == 0 && varsigma[i] != varsigma[q.rho[i]])
            throw Error("INVALID_PARAMETERS", "parameters must match along the involution");
    }

    // triangular rewrite into products L(v+,w+) * L(v0,w0)
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::pair<DimPair, IntVec>> keyinfo;
    std::map<std::pair<std::vector<int>, std::vector<int>>, HalfLaurent> coeffs;
    GElement rest = x;
    while (!rest.is_zero()) {
        // minimal remaining term in the (|v|, lex) order
        auto best = rest.terms().begin();
        for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it) {
            auto lv = it->first.v.sum(), bv = best->first.v.sum();
            if (std::tie(lv, it->first) < std::tie(bv, best->first)) best = it;
        }
        DimPair p = best->first;
        HalfLaurent cf = best->second;
        auto [plus, zero] = o_.decompose_pair(p);
        IntVec a(q.rank);
        for (int i = 0; i < q.rank; ++i) a[i] = p.v[o_.injective_vertex(i)];
        GElement prod = multiply(GElement::basis(plus), GElement::basis(zero));
        HalfLaurent lead = prod.coeff(p);
        if (!lead.is_monomial()) throw Error("INFEASIBLE", "filtration leading term is not a monomial");
        // divide cf by the monomial lead
        int ldeg = lead.min_deg();
        long lc = lead.coeff(ldeg);
        HalfLaurent lambda;
        for (auto& [d, cc] : cf.coeffs()) {
            if (cc % lc != 0) throw Error("INFEASIBLE", "non-integral filtration coefficient");
            lambda.add_term(d - ldeg, cc / lc);
        }
        auto kk = std::make_pair(key(plus.v), key(a));
        keyinfo[kk] = {plus, a};
        auto cit = coeffs.find(kk);
        if (cit == coeffs.end()) coeffs[kk] = lambda;
        else cit->second += lambda;
        rest = rest - lambda * prod;
    }

    // substitute the central classes
    std::vector<ReducedTerm> out;
    for (auto& [kk, lam] : coeffs) {
        if (lam.is_zero()) continue;
        auto& [plus, a] = keyinfo[kk];
        HalfLaurent cf = lam;
        IntVec residual = IntVec::Zero(q.rank);
        for (int i = 0; i < q.rank; ++i) {
            if (q.rho[i] == i) {
                // L(v^i, w^i) -> -v varsigma_i
                for (int t = 0; t < a[i]; ++t) cf *= HalfLaurent::u_pow(2, -1) * varsigma[i];
            } else if (i < q.rho[i]) {
                int m = std::min(a[i], a[q.rho[i]]);
                for (int t = 0; t < m; ++t) cf *= varsigma[i] * varsigma[i];
                residual[i] = a[i] - m;
                residual[q.rho[i]] = a[q.rho[i]] - m;
            }
        }
        if (cf.is_zero()) continue;
        out.push_back({plus, residual, cf});
    }
    std::sort(out.begin(), out.end(), [](const ReducedTerm& x_, const ReducedTerm& y_) {
        if (!(x_.plus == y_.plus)) return x_.plus < y_.plus;
        for (int i = 0; i < x_.residual.size(); ++i)
            if (x_.residual[i] != y_.residual[i]) return x_.residual[i] < y_.residual[i];
        return false;
    });
    return out;
}

std::string GrothRing::str(const GElement& g) const {
    if (g.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [p, c] : g.terms()) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")*L(";
        bool f2 = true;
        for (int z = 0; z < o_.modules(); ++z) {
            if (p.v[z] == 0) continue;
            if (!f2) os << "+";
            if (p.v[z] != 1) os << p.v[z] << "*";
            os << "[" << o_.root_key(z) << "]";
            f2 = false;
        }
        if (f2) os << "0";
        os << "; ";
        for (int i = 0; i < p.w.size(); ++i) os << p.w[i] << (i + 1 < p.w.size() ? "," : "");
        os << ")";
        first = false;
    }
    return os.str();
}

}  // namespace iqg
