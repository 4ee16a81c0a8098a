#include <limroot/errors.hpp>
#include <limroot/satake.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace limroot {

bool SatakeDiagram::has_vertex(int id) const {
    return std::any_of(vertices.begin(), vertices.end(),
                       [&](const SatakeVertex& v) { return v.id == id; });
}

bool SatakeDiagram::is_black(int id) const {
    for (const auto& v : vertices)
        if (v.id == id) return v.black;
    throw MalformedDiagram("no vertex " + std::to_string(id));
}

std::size_t SatakeDiagram::white_count() const {
    return static_cast<std::size_t>(
        std::count_if(vertices.begin(), vertices.end(),
                      [](const SatakeVertex& v) { return !v.black; }));
}

void validate_diagram(const SatakeDiagram& d) {
    std::set<int> seen;
    for (const auto& v : d.vertices) require(seen.insert(v.id).second, "duplicate vertex id");
    for (const auto& e : d.edges) {
        require(seen.count(e.a) && seen.count(e.b) && e.a != e.b, "bad edge endpoints");
        require(e.bond >= 1 && e.bond <= 3, "bad bond");
        require(e.bond == 1 || e.shortward == e.a || e.shortward == e.b,
                "multi-bond edge missing short side");
    }
    std::set<int> arrowed;
    for (const auto& [a, b] : d.arrows) {
        require(seen.count(a) && seen.count(b) && a != b, "bad arrow endpoints");
        require(!d.is_black(a) && !d.is_black(b), "arrow endpoint not white");
        require(arrowed.insert(a).second && arrowed.insert(b).second,
                "vertex in more than one arrow pair");
    }
}

namespace {

struct Builder {
    SatakeDiagram d;
    void vertex(int id, bool black) { d.vertices.push_back({id, black}); }
    // path of single-bond edges over existing ids
    void chain(int from, int to) {
        for (int i = from; i < to; ++i) d.edges.push_back({i, i + 1, 1, -1});
    }
    void edge(int a, int b, int bond = 1, int shortward = -1) {
        d.edges.push_back({a, b, bond, shortward});
    }
    void arrow(int a, int b) { d.arrows.push_back({std::min(a, b), std::max(a, b)}); }
    SatakeDiagram take() {
        std::sort(d.vertices.begin(), d.vertices.end(),
                  [](const SatakeVertex& x, const SatakeVertex& y) { return x.id < y.id; });
        std::sort(d.arrows.begin(), d.arrows.end());
        validate_diagram(d);
        return std::move(d);
    }
};

// A_k path on ids base..base+k-1.
void add_A(Builder& b, int base, int k, auto black_pred) {
    for (int i = 0; i < k; ++i) b.vertex(base + i, black_pred(i + 1));
    b.chain(base, base + k - 1);
}

// B_m or C_m path on ids base..base+m-1; short_last: last simple short (B).
void add_BC(Builder& b, int base, int m, bool short_last, auto black_pred) {
    for (int i = 0; i < m; ++i) b.vertex(base + i, black_pred(i + 1));
    if (m >= 2) {
        b.chain(base, base + m - 2);
        int last = base + m - 1;
        b.edge(last - 1, last, 2, short_last ? last : last - 1);
    }
}

// D_m on ids base..base+m-1 (fork at base+m-3 joining the last two).
void add_D(Builder& b, int base, int m, auto black_pred) {
    for (int i = 0; i < m; ++i) b.vertex(base + i, black_pred(i + 1));
    if (m >= 3) {
        b.chain(base, base + m - 2);
        b.edge(base + m - 3, base + m - 1);
    }
    // m == 2: two disconnected vertices; m == 1: empty root system, one slot
    // of a with no diagram trace -- caller emits no vertex in that case.
}

}  // namespace

SatakeDiagram satake_of(const RealFormDescriptor& in) {
    check_descriptor(in);
    RealFormDescriptor d = in;
    if (d.family == Family::GL) d.family = Family::SL;
    if (d.family == Family::U) d.family = Family::SU;
    if (d.family == Family::O_pq) d.family = Family::SO_pq;
    if (d.family == Family::OC) d.family = Family::SOC;
    long p = std::max(d.p, d.q), q = std::min(d.p, d.q);
    Builder b;
    auto all_white = [](int) { return false; };
    switch (d.family) {
        case Family::SL: {
            int k = static_cast<int>(d.n) - 1;
            if (d.field == Field::R) {
                if (k >= 1) add_A(b, 1, k, all_white);
            } else if (d.field == Field::C) {
                if (k >= 1) {
                    add_A(b, 1, k, all_white);
                    add_A(b, k + 1, k, all_white);
                    for (int i = 1; i <= k; ++i) b.arrow(i, k + i);
                }
            } else {  // sl(n,H): A_{2n-1}, odd vertices black
                add_A(b, 1, 2 * static_cast<int>(d.n) - 1, [](int i) { return i % 2 == 1; });
            }
            return b.take();
        }
        case Family::SU: {
            int n = static_cast<int>(p + q);
            add_A(b, 1, n - 1, [&](int i) { return i > q && i < n - q; });
            int pairs = static_cast<int>(p == q ? q - 1 : q);
            for (int i = 1; i <= pairs; ++i) b.arrow(i, n - i);
            return b.take();
        }
        case Family::SO_pq: {
            int n = static_cast<int>(p + q);
            if (n % 2 == 1) {
                add_BC(b, 1, (n - 1) / 2, true, [&](int i) { return i > q; });
            } else {
                int m = n / 2;
                if (m == 1) return b.take();  // so(1,1): no roots
                if (q == m - 1) {
                    add_D(b, 1, m, all_white);
                    b.arrow(m - 1, m);
                } else {
                    add_D(b, 1, m, [&](int i) { return i > q; });
                }
            }
            return b.take();
        }
        case Family::Sp_pq:
            add_BC(b, 1, static_cast<int>(p + q), false,
                   [&](int i) { return i % 2 == 1 || i > 2 * q; });
            return b.take();
        case Family::SpF: {
            int n = static_cast<int>(d.n);
            if (d.field == Field::R) {
                add_BC(b, 1, n, false, all_white);
            } else {
                add_BC(b, 1, n, false, all_white);
                add_BC(b, n + 1, n, false, all_white);
                for (int i = 1; i <= n; ++i) b.arrow(i, n + i);
            }
            return b.take();
        }
        case Family::SOC: {
            int n = static_cast<int>(d.n);
            int m = n / 2;
            if (n % 2 == 1) {
                if (m >= 1) {
                    add_BC(b, 1, m, true, all_white);
                    add_BC(b, m + 1, m, true, all_white);
                    for (int i = 1; i <= m; ++i) b.arrow(i, m + i);
                }
            } else if (m >= 2) {
                add_D(b, 1, m, all_white);
                add_D(b, m + 1, m, all_white);
                for (int i = 1; i <= m; ++i) b.arrow(i, m + i);
            }
            return b.take();
        }
        case Family::SOstar: {
            int n = static_cast<int>(d.n);
            if (n % 2 == 0) {
                add_D(b, 1, n, [](int i) { return i % 2 == 1; });
            } else {
                add_D(b, 1, n, [&](int i) { return i % 2 == 1 && i != n; });
                b.arrow(n - 1, n);
            }
            return b.take();
        }
        default:
            throw UnsupportedFamily(in.to_string());
    }
}

std::vector<RestrictClass> restrict_simple(const SatakeDiagram& d) {
    validate_diagram(d);
    std::map<int, int> partner;
    for (const auto& [a, b] : d.arrows) {
        partner[a] = b;
        partner[b] = a;
    }
    std::vector<RestrictClass> classes;
    std::set<int> done;
    for (const auto& v : d.vertices) {
        if (v.black || done.count(v.id)) continue;
        RestrictClass c;
        c.vertex_ids.push_back(v.id);
        done.insert(v.id);
        auto it = partner.find(v.id);
        if (it != partner.end()) {
            c.vertex_ids.push_back(it->second);
            done.insert(it->second);
        }
        classes.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < classes.size(); ++i) classes[i].simple_index = i + 1;
    return classes;
}

SatakeDiagram delete_white(const SatakeDiagram& d, const std::set<int>& S) {
    validate_diagram(d);
    for (int id : S) {
        if (!d.has_vertex(id)) throw MalformedDiagram("no vertex " + std::to_string(id));
        if (d.is_black(id)) throw NotWhite("vertex " + std::to_string(id) + " is black");
    }
    std::set<int> gone = S;
    for (const auto& [a, b] : d.arrows) {
        if (S.count(a)) gone.insert(b);
        if (S.count(b)) gone.insert(a);
    }
    SatakeDiagram out;
    for (const auto& v : d.vertices)
        if (!gone.count(v.id)) out.vertices.push_back(v);
    for (const auto& e : d.edges)
        if (!gone.count(e.a) && !gone.count(e.b)) out.edges.push_back(e);
    for (const auto& [a, b] : d.arrows)
        if (!gone.count(a) && !gone.count(b)) out.arrows.push_back({a, b});
    return out;
}

namespace {

struct EdgeInfo {
    int bond;
    int shortward;
};

using EdgeMap = std::map<std::pair<int, int>, EdgeInfo>;

EdgeMap edge_map(const SatakeDiagram& d) {
    EdgeMap m;
    for (const auto& e : d.edges) {
        m[{e.a, e.b}] = {e.bond, e.shortward};
        m[{e.b, e.a}] = {e.bond, e.shortward};
    }
    return m;
}

std::string edge_symbol(const EdgeMap& em, int from, int to) {
    auto it = em.find({from, to});
    require(it != em.end(), "canonical_key: missing edge");
    const auto& e = it->second;
    if (e.bond == 1) return "-";
    std::string s = e.bond == 2 ? "=" : "#";
    s += (e.shortward == to) ? "n" : "p";
    return s;
}

struct Traversal {
    std::vector<int> order;
    std::string text;
};

std::string color_char(const SatakeDiagram& d, int id) { return d.is_black(id) ? "b" : "w"; }

std::string path_text(const SatakeDiagram& d, const EdgeMap& em, const std::vector<int>& seq) {
    std::string s;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        s += color_char(d, seq[i]);
        if (i + 1 < seq.size()) s += edge_symbol(em, seq[i], seq[i + 1]);
    }
    return s;
}

// All candidate linearizations of one connected component.
std::vector<Traversal> component_traversals(const SatakeDiagram& d, const EdgeMap& em,
                                            const std::vector<int>& comp) {
    std::map<int, std::vector<int>> adj;
    for (int id : comp) adj[id];
    for (const auto& e : d.edges) {
        if (adj.count(e.a) && adj.count(e.b)) {
            adj[e.a].push_back(e.b);
            adj[e.b].push_back(e.a);
        }
    }
    std::vector<Traversal> out;
    auto walk = [&](int start, int prev) {
        std::vector<int> seq{start};
        int cur = start;
        while (true) {
            int next = -1;
            for (int nb : adj[cur])
                if (nb != prev) next = nb;
            if (next == -1) break;
            prev = cur;
            cur = next;
            seq.push_back(cur);
        }
        return seq;
    };
    std::vector<int> deg3;
    bool simple_path = true;
    for (const auto& [id, nbs] : adj) {
        if (nbs.size() == 3) deg3.push_back(id);
        if (nbs.size() > 3) simple_path = false;
    }
    if (deg3.empty() && simple_path) {
        if (comp.size() == 1) {
            out.push_back({{comp[0]}, color_char(d, comp[0])});
            return out;
        }
        std::vector<int> ends;
        for (const auto& [id, nbs] : adj)
            if (nbs.size() <= 1) ends.push_back(id);
        require(ends.size() == 2, "canonical_key: cycle component");
        for (int e : ends) {
            std::vector<int> seq = walk(e, -1);
            out.push_back({seq, path_text(d, em, seq)});
        }
        return out;
    }
    if (deg3.size() == 1 && simple_path) {
        int center = deg3[0];
        std::vector<std::vector<int>> branches;  // center-outward, center excluded
        for (int nb : adj[center]) {
            std::vector<int> seq = walk(nb, center);
            branches.push_back(seq);
        }
        require(branches.size() == 3, "canonical_key: bad fork");
        for (int spine = 0; spine < 3; ++spine) {
            std::vector<int> tips;
            for (int i = 0; i < 3; ++i)
                if (i != spine) tips.push_back(i);
            for (int flip = 0; flip < 2; ++flip) {
                int t1 = tips[flip], t2 = tips[1 - flip];
                std::vector<int> sp = branches[spine];
                std::reverse(sp.begin(), sp.end());
                sp.push_back(center);
                Traversal t;
                t.text = path_text(d, em, sp) + "(" + edge_symbol(em, center, branches[t1][0]) +
                         path_text(d, em, branches[t1]) + "," +
                         edge_symbol(em, center, branches[t2][0]) + path_text(d, em, branches[t2]) +
                         ")";
                t.order = sp;
                t.order.insert(t.order.end(), branches[t1].begin(), branches[t1].end());
                t.order.insert(t.order.end(), branches[t2].begin(), branches[t2].end());
                out.push_back(std::move(t));
            }
        }
        return out;
    }
    throw MalformedDiagram("canonical_key: component is not a classical diagram shape");
}

}  // namespace

std::string canonical_key(const SatakeDiagram& d) {
    if (d.vertices.empty()) return "()";
    EdgeMap em = edge_map(d);
    // connected components via union-find on edges
    std::map<int, int> parent;
    for (const auto& v : d.vertices) parent[v.id] = v.id;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : d.edges) parent[find(e.a)] = find(e.b);
    std::map<int, std::vector<int>> comps;
    for (const auto& v : d.vertices) comps[find(v.id)].push_back(v.id);

    struct Comp {
        std::vector<Traversal> cands;
        std::string best;  // lex-min standalone text, for grouping
    };
    std::vector<Comp> all;
    for (auto& [root, ids] : comps) {
        Comp c;
        c.cands = component_traversals(d, em, ids);
        c.best = c.cands[0].text;
        for (const auto& t : c.cands) c.best = std::min(c.best, t.text);
        all.push_back(std::move(c));
    }
    // groups of interchangeable components, sorted by standalone text
    std::stable_sort(all.begin(), all.end(),
                     [](const Comp& a, const Comp& b) { return a.best < b.best; });
    std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin,end)
    for (std::size_t i = 0; i < all.size();) {
        std::size_t j = i;
        while (j < all.size() && all[j].best == all[i].best) ++j;
        groups.push_back({i, j});
        i = j;
    }
    // enumerate arrangements: per group, permutations of members; per
    // component, its candidate traversals; take the lexicographically
    // smallest full encoding (component texts + arrow positions).
    std::string best_key;
    bool have = false;
    long budget = 500000;
    std::vector<std::size_t> perm(all.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::size_t> choice(all.size(), 0);

    auto emit = [&]() {
        std::map<int, std::size_t> pos;
        std::string key;
        std::size_t offset = 0;
        for (std::size_t pi = 0; pi < perm.size(); ++pi) {
            const Traversal& t = all[perm[pi]].cands[choice[perm[pi]]];
            for (std::size_t k = 0; k < t.order.size(); ++k) pos[t.order[k]] = offset + k;
            offset += t.order.size();
            key += t.text + "|";
        }
        std::vector<std::pair<std::size_t, std::size_t>> ar;
        for (const auto& [a, bb] : d.arrows) {
            std::size_t x = pos.at(a), y = pos.at(bb);
            ar.push_back({std::min(x, y), std::max(x, y)});
        }
        std::sort(ar.begin(), ar.end());
        for (const auto& [x, y] : ar)
            key += "A" + std::to_string(x) + "," + std::to_string(y);
        if (!have || key < best_key) {
            best_key = key;
            have = true;
        }
    };

    std::function<void(std::size_t)> rec_choice = [&](std::size_t idx) {
        if (budget <= 0) throw MalformedDiagram("canonical_key: diagram too complex");
        if (idx == all.size()) {
            --budget;
            emit();
            return;
        }
        for (std::size_t c = 0; c < all[idx].cands.size(); ++c) {
            choice[idx] = c;
            rec_choice(idx + 1);
        }
    };
    std::function<void(std::size_t)> rec_group = [&](std::size_t g) {
        if (g == groups.size()) {
            rec_choice(0);
            return;
        }
        auto [lo, hi] = groups[g];
        std::vector<std::size_t> idx(perm.begin() + lo, perm.begin() + hi);
        std::sort(idx.begin(), idx.end());
        do {
            std::copy(idx.begin(), idx.end(), perm.begin() + lo);
            rec_group(g + 1);
        } while (std::next_permutation(idx.begin(), idx.end()));
    };
    rec_group(0);
    return best_key;
}

bool diagram_isomorphic(const SatakeDiagram& a, const SatakeDiagram& b) {
    return canonical_key(a) == canonical_key(b);
}

SatakeDiagram strip_black_components(const SatakeDiagram& d) {
    std::map<int, int> parent;
    for (const auto& v : d.vertices) parent[v.id] = v.id;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : d.edges) parent[find(e.a)] = find(e.b);
    std::map<int, bool> has_white;
    for (const auto& v : d.vertices)
        if (!v.black) has_white[find(v.id)] = true;
    SatakeDiagram out;
    for (const auto& v : d.vertices)
        if (has_white.count(find(v.id))) out.vertices.push_back(v);
    for (const auto& e : d.edges)
        if (has_white.count(find(e.a))) out.edges.push_back(e);
    out.arrows = d.arrows;  // arrows touch white vertices only
    return out;
}

std::vector<SatakeDiagram> parabolic_components(const SatakeDiagram& d) {
    auto classes = restrict_simple(d);
    std::size_t k = classes.size();
    require(k <= 20, "parabolic_components: too many classes");
    std::map<std::string, SatakeDiagram> seen;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::set<int> S;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t{1} << i))
                S.insert(classes[i].vertex_ids.begin(), classes[i].vertex_ids.end());
        SatakeDiagram res = delete_white(d, S);
        seen.emplace(canonical_key(res), std::move(res));
    }
    std::vector<SatakeDiagram> out;
    for (auto& [key, diag] : seen) out.push_back(std::move(diag));
    return out;
}

std::string to_dot(const SatakeDiagram& d) {
    std::string s = "graph satake {\n  node [shape=circle, fixedsize=true, width=0.3];\n";
    for (const auto& v : d.vertices)
        s += "  v" + std::to_string(v.id) + " [label=\"" + std::to_string(v.id) + "\", style=" +
             (v.black ? "filled, fillcolor=black, fontcolor=white" : "solid") + "];\n";
    for (const auto& e : d.edges) {
        s += "  v" + std::to_string(e.a) + " -- v" + std::to_string(e.b);
        if (e.bond > 1)
            s += " [penwidth=" + std::to_string(e.bond) + ", label=\"" +
                 std::to_string(e.bond) + (e.shortward == e.b ? ">" : "<") + "\"]";
        s += ";\n";
    }
    for (const auto& [a, b] : d.arrows)
        s += "  v" + std::to_string(a) + " -- v" + std::to_string(b) + " [style=dashed];\n";
    s += "}\n";
    return s;
}

}  // namespace limroot
