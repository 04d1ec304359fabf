#include "iqg/json_io.hpp"

#include <json.hpp>
#include <sstream>

namespace iqg {

using nlohmann::json;

IQuiver quiver_from_json(const std::string& text) {
    json j = json::parse(text);
    DynkinType t = type_from_letter(j.at("type").get<std::string>().at(0));
    int rank = j.at("rank").get<int>();
    std::vector<std::pair<int, int>> arrows;
    for (auto& a : j.at("arrows")) arrows.push_back({a.at(0).get<int>() - 1, a.at(1).get<int>() - 1});
    std::vector<int> rho;
    if (j.contains("involution")) {
        for (auto& r : j.at("involution")) rho.push_back(r.get<int>() - 1);
    } else {
        for (int i = 0; i < rank; ++i) rho.push_back(i);
    }
    return make_iquiver(t, rank, std::move(arrows), std::move(rho));
}

std::string quiver_to_json(const IQuiver& q) {
    json j;
    j["type"] = std::string(1, type_letter(q.type));
    j["rank"] = q.rank;
    j["arrows"] = json::array();
    for (auto& [a, b] : q.arrows) j["arrows"].push_back({a + 1, b + 1});
    j["involution"] = json::array();
    for (int i = 0; i < q.rank; ++i) j["involution"].push_back(q.rho[i] + 1);
    return j.dump();
}

namespace {
json vmap_to_json(const OrbitQuiver& o, const IntVec& v) {
    json m = json::object();
    for (int z = 0; z < o.modules(); ++z)
        if (v[z] != 0) m[o.root_key(z)] = v[z];
    return m;
}

IntVec vmap_from_json(const OrbitQuiver& o, const json& m) {
    IntVec v = o.zero_v();
    for (auto it = m.begin(); it != m.end(); ++it) {
        IntVec root(o.quiver().rank);
        std::stringstream ss(it.key());
        std::string part;
        int idx = 0;
        while (std::getline(ss, part, '.')) root[idx++] = std::stoi(part);
        v[o.knit().root_index(root)] = it.value().get<int>();
    }
    return v;
}

json wvec_to_json(const IntVec& w) {
    json a = json::array();
    for (int i = 0; i < w.size(); ++i) a.push_back(w[i]);
    return a;
}

IntVec wvec_from_json(const json& a) {
    IntVec w((int)a.size());
    for (size_t i = 0; i < a.size(); ++i) w[(int)i] = a[i].get<int>();
    return w;
}
}  // namespace

CaseCatalog catalog_from_json(const OrbitQuiver& orbit, const std::string& text) {
    CaseCatalog cat = CaseCatalog::standard(orbit);
    json j = json::parse(text);
    for (auto& f : j) {
        CaseCatalog::Fact fact;
        fact.kind = f.at("kind").get<std::string>();
        fact.v = vmap_from_json(orbit, f.at("v"));
        fact.w = wvec_from_json(f.at("w"));
        if (f.contains("v2")) fact.v2 = vmap_from_json(orbit, f.at("v2"));
        if (f.contains("anchor")) fact.anchor = f.at("anchor").get<std::string>();
        cat.add(std::move(fact));
    }
    return cat;
}

std::string catalog_to_json(const OrbitQuiver& orbit, const CaseCatalog& cat) {
    json j = json::array();
    for (auto& f : cat.facts()) {
        json e;
        e["kind"] = f.kind;
        e["v"] = vmap_to_json(orbit, f.v);
        e["w"] = wvec_to_json(f.w);
        if (f.v2.size() > 0) e["v2"] = vmap_to_json(orbit, f.v2);
        e["anchor"] = f.anchor;
        j.push_back(e);
    }
    return j.dump(2);
}

std::string pairs_to_json(const OrbitQuiver& orbit, const std::vector<DimPair>& pairs) {
    json j;
    j["pairs"] = json::array();
    for (auto& p : pairs) {
        json e;
        e["v"] = vmap_to_json(orbit, p.v);
        e["w"] = wvec_to_json(p.w);
        e["slack"] = vmap_to_json(orbit, orbit.slack(p));
        j["pairs"].push_back(e);
    }
    return j.dump(2);
}

std::string knit_to_json(const KnitTable& k) {
    json j;
    j["coxeter"] = k.coxeter();
    j["levels"] = {k.pmin(), k.pmax()};
    j["vertices"] = json::array();
    const auto& roots = k.roots();
    for (int p = k.pmin(); p <= k.pmax(); ++p) {
        for (int i = 0; i < k.quiver().rank; ++i) {
            auto l = k.label(i, p);
            json e;
            e["vertex"] = i + 1;
            e["level"] = p;
            std::ostringstream os;
            for (int t = 0; t < roots[l.root].size(); ++t) {
                if (t) os << ".";
                os << roots[l.root][t];
            }
            e["root"] = os.str();
            e["shift"] = l.shift;
            j["vertices"].push_back(e);
        }
    }
    // the functor data as permutations of (vertex, level) within the window
    auto perm = [&](auto&& f) {
        json a = json::array();
        for (int p = k.pmin(); p <= k.pmax(); ++p)
            for (int i = 0; i < k.quiver().rank; ++i) {
                auto l = k.label(i, p);
                try {
                    DerivedObject img = f(DerivedObject{l.root, l.shift});
                    auto [i2, p2] = k.vertex_of(img.root, img.shift);
                    a.push_back({{"from", {i + 1, p}}, {"to", {i2 + 1, p2}}});
                } catch (const Error&) {
                }
            }
        return a;
    };
    j["tau"] = perm([&](DerivedObject x) { return k.tau(x); });
    j["sigma"] = perm([&](DerivedObject x) { return k.sigma(x); });
    j["rho_hat"] = perm([&](DerivedObject x) { return k.rho_hat(x); });
    return j.dump(2);
}

std::string knit_to_dot(const KnitTable& k) {
    std::ostringstream os;
    os << "digraph zq {\n  rankdir=LR;\n";
    const auto& roots = k.roots();
    auto name = [&](int i, int p) {
        std::ostringstream n;
        n << "v" << i << "_" << (p - k.pmin());
        return n.str();
    };
    for (int p = k.pmin(); p <= k.pmax(); ++p)
        for (int i = 0; i < k.quiver().rank; ++i) {
            auto l = k.label(i, p);
            os << "  " << name(i, p) << " [label=\"";
            for (int t = 0; t < roots[l.root].size(); ++t) os << roots[l.root][t];
            os << "[" << l.shift << "]\"];\n";
        }
    for (int p = k.pmin(); p <= k.pmax(); ++p)
        for (auto& [a, b] : k.quiver().arrows) {
            os << "  " << name(a, p) << " -> " << name(b, p) << ";\n";
            if (p + 1 <= k.pmax()) os << "  " << name(b, p) << " -> " << name(a, p + 1) << ";\n";
        }
    os << "}\n";
    return os.str();
}

std::string gelement_to_json(const OrbitQuiver& orbit, const GElement& g) {
    json j = json::array();
    for (auto& [p, c] : g.terms()) {
        json e;
        e["v"] = vmap_to_json(orbit, p.v);
        e["w"] = wvec_to_json(p.w);
        e["coeff"] = c.str();
        j.push_back(e);
    }
    return j.dump(2);
}

}  // namespace iqg
