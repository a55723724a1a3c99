#include "minpot/matching.hpp"

#include "minpot/errors.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

namespace minpot {

namespace {

// Primal-dual blossom search for maximum-weight matchings on general
// graphs, following the classic O(V^3) structure with dual variables per
// vertex and per blossom. Edge "arrows" 2k and 2k+1 address the two
// endpoints of edge k; mate[] stores the arrow pointing at the partner.
class BlossomMatcher {
public:
    BlossomMatcher(int vertex_count, const std::vector<WeightedEdge>& edge_list)
        : edges(edge_list), nvertex(vertex_count), nedge(static_cast<int>(edge_list.size())) {
        maxweight = 0;
        for (const auto& e : edges) maxweight = std::max(maxweight, e.weight);
        endpoint.resize(2 * nedge);
        for (int p = 0; p < 2 * nedge; ++p)
            endpoint[p] = (p % 2 == 0) ? edges[p / 2].u : edges[p / 2].v;
        neighbend.assign(nvertex, {});
        for (int k = 0; k < nedge; ++k) {
            neighbend[edges[k].u].push_back(2 * k + 1);
            neighbend[edges[k].v].push_back(2 * k);
        }
        mate.assign(nvertex, -1);
        label.assign(2 * nvertex, 0);
        labelend.assign(2 * nvertex, -1);
        inblossom.resize(nvertex);
        for (int v = 0; v < nvertex; ++v) inblossom[v] = v;
        blossomparent.assign(2 * nvertex, -1);
        blossomchilds.assign(2 * nvertex, {});
        blossombase.assign(2 * nvertex, -1);
        for (int v = 0; v < nvertex; ++v) blossombase[v] = v;
        blossomendps.assign(2 * nvertex, {});
        bestedge.assign(2 * nvertex, -1);
        blossombestedges.assign(2 * nvertex, std::nullopt);
        for (int b = 2 * nvertex - 1; b >= nvertex; --b) unusedblossoms.push_back(b);
        dualvar.assign(2 * nvertex, Rational(0));
        for (int v = 0; v < nvertex; ++v) dualvar[v] = maxweight;
        allowedge.assign(nedge, false);
    }

    void solve() {
        for (int stage = 0; stage < nvertex; ++stage) {
            std::fill(label.begin(), label.end(), 0);
            std::fill(bestedge.begin(), bestedge.end(), -1);
            for (auto& b : blossombestedges) b.reset();
            std::fill(allowedge.begin(), allowedge.end(), false);
            queue.clear();

            for (int v = 0; v < nvertex; ++v)
                if (mate[v] == -1 && label[inblossom[v]] == 0) assign_label(v, 1, -1);

            bool augmented = false;
            while (true) {
                while (!queue.empty() && !augmented) {
                    const int v = queue.back();
                    queue.pop_back();
                    assert(label[inblossom[v]] == 1);
                    for (const int p : neighbend[v]) {
                        const int k = p / 2;
                        const int w = endpoint[p];
                        if (inblossom[v] == inblossom[w]) continue;
                        Rational kslack;
                        if (!allowedge[k]) {
                            kslack = slack(k);
                            if (kslack <= 0) allowedge[k] = true;
                        }
                        if (allowedge[k]) {
                            if (label[inblossom[w]] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label[inblossom[w]] == 1) {
                                const int base = scan_blossom(v, w);
                                if (base >= 0) {
                                    add_blossom(base, k);
                                } else {
                                    augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label[w] == 0) {
                                assert(label[inblossom[w]] == 2);
                                label[w] = 2;
                                labelend[w] = p ^ 1;
                            }
                        } else if (label[inblossom[w]] == 1) {
                            const int b = inblossom[v];
                            if (bestedge[b] == -1 || kslack < slack(bestedge[b]))
                                bestedge[b] = k;
                        } else if (label[w] == 0) {
                            if (bestedge[w] == -1 || kslack < slack(bestedge[w]))
                                bestedge[w] = k;
                        }
                    }
                }
                if (augmented) break;

                // No augmenting path under the current duals; compute the
                // largest change that keeps them feasible.
                int deltatype = 1;
                Rational delta = dualvar[0];
                for (int v = 1; v < nvertex; ++v) delta = std::min(delta, dualvar[v]);
                int deltaedge = -1;
                int deltablossom = -1;
                for (int v = 0; v < nvertex; ++v) {
                    if (label[inblossom[v]] == 0 && bestedge[v] != -1) {
                        const Rational d = slack(bestedge[v]);
                        if (d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = bestedge[v];
                        }
                    }
                }
                for (int b = 0; b < 2 * nvertex; ++b) {
                    if (blossomparent[b] == -1 && label[b] == 1 && bestedge[b] != -1) {
                        const Rational d = slack(bestedge[b]) / 2;
                        if (d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = bestedge[b];
                        }
                    }
                }
                for (int b = nvertex; b < 2 * nvertex; ++b) {
                    if (blossombase[b] >= 0 && blossomparent[b] == -1 && label[b] == 2 &&
                        dualvar[b] < delta) {
                        delta = dualvar[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }

                for (int v = 0; v < nvertex; ++v) {
                    if (label[inblossom[v]] == 1)
                        dualvar[v] -= delta;
                    else if (label[inblossom[v]] == 2)
                        dualvar[v] += delta;
                }
                for (int b = nvertex; b < 2 * nvertex; ++b) {
                    if (blossombase[b] >= 0 && blossomparent[b] == -1) {
                        if (label[b] == 1)
                            dualvar[b] += delta;
                        else if (label[b] == 2)
                            dualvar[b] -= delta;
                    }
                }

                if (deltatype == 1) {
                    break; // optimum reached
                } else if (deltatype == 2) {
                    allowedge[deltaedge] = true;
                    int i = edges[deltaedge].u;
                    if (label[inblossom[i]] == 0) i = edges[deltaedge].v;
                    assert(label[inblossom[i]] == 1);
                    queue.push_back(i);
                } else if (deltatype == 3) {
                    allowedge[deltaedge] = true;
                    const int i = edges[deltaedge].u;
                    assert(label[inblossom[i]] == 1);
                    queue.push_back(i);
                } else {
                    expand_blossom(deltablossom, false);
                }
            }
            if (!augmented) break;

            // blossoms with zero dual carry no constraint; drop them so the
            // final certificate only mentions full blossoms
            for (int b = nvertex; b < 2 * nvertex; ++b) {
                if (blossomparent[b] == -1 && blossombase[b] >= 0 && label[b] == 1 &&
                    dualvar[b] == 0)
                    expand_blossom(b, true);
            }
        }
        verify_optimum();
    }

    /// Matched partner of each vertex, or -1.
    std::vector<int> mates() const {
        std::vector<int> out(nvertex, -1);
        for (int v = 0; v < nvertex; ++v)
            if (mate[v] >= 0) out[v] = endpoint[mate[v]];
        return out;
    }

    /// Indices of the matched edges.
    std::vector<int> matched_edges() const {
        std::vector<int> out;
        for (int v = 0; v < nvertex; ++v)
            if (mate[v] >= 0 && endpoint[mate[v]] > v) out.push_back(mate[v] / 2);
        return out;
    }

private:
    std::vector<WeightedEdge> edges;
    int nvertex;
    int nedge;
    Rational maxweight;
    std::vector<int> endpoint;
    std::vector<std::vector<int>> neighbend;
    std::vector<int> mate;
    std::vector<int> label;
    std::vector<int> labelend;
    std::vector<int> inblossom;
    std::vector<int> blossomparent;
    std::vector<std::vector<int>> blossomchilds;
    std::vector<int> blossombase;
    std::vector<std::vector<int>> blossomendps;
    std::vector<int> bestedge;
    std::vector<std::optional<std::vector<int>>> blossombestedges;
    std::vector<int> unusedblossoms;
    std::vector<Rational> dualvar;
    std::vector<bool> allowedge;
    std::vector<int> queue;

    Rational slack(int k) const {
        return dualvar[edges[k].u] + dualvar[edges[k].v] - edges[k].weight * 2;
    }

    // child / endpoint lists are walked with wrapping indices
    int child_at(int b, int j) const {
        const int len = static_cast<int>(blossomchilds[b].size());
        return blossomchilds[b][((j % len) + len) % len];
    }
    int endp_at(int b, int j) const {
        const int len = static_cast<int>(blossomendps[b].size());
        return blossomendps[b][((j % len) + len) % len];
    }

    void blossom_leaves(int b, std::vector<int>& out) const {
        if (b < nvertex) {
            out.push_back(b);
            return;
        }
        for (const int child : blossomchilds[b]) blossom_leaves(child, out);
    }

    void assign_label(int w, int t, int p) {
        const int b = inblossom[w];
        assert(label[w] == 0 && label[b] == 0);
        label[w] = label[b] = t;
        labelend[w] = labelend[b] = p;
        bestedge[w] = bestedge[b] = -1;
        if (t == 1) {
            std::vector<int> leaves;
            blossom_leaves(b, leaves);
            queue.insert(queue.end(), leaves.begin(), leaves.end());
        } else {
            const int base = blossombase[b];
            assert(mate[base] >= 0);
            assign_label(endpoint[mate[base]], 1, mate[base] ^ 1);
        }
    }

    // Trace back from both ends of a tight S-S edge; returns the base of
    // the first common ancestor, or -1 when the paths reach distinct roots
    // (an augmenting path).
    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = inblossom[v];
            if (label[b] & 4) {
                base = blossombase[b];
                break;
            }
            assert(label[b] == 1);
            path.push_back(b);
            label[b] = 5;
            assert(labelend[b] == mate[blossombase[b]]);
            if (labelend[b] == -1) {
                v = -1;
            } else {
                v = endpoint[labelend[b]];
                b = inblossom[v];
                assert(label[b] == 2);
                assert(labelend[b] >= 0);
                v = endpoint[labelend[b]];
            }
            if (w != -1) std::swap(v, w);
        }
        for (const int b : path) label[b] = 1;
        return base;
    }

    void add_blossom(int base, int k) {
        int v = edges[k].u;
        int w = edges[k].v;
        const int bb = inblossom[base];
        int bv = inblossom[v];
        int bw = inblossom[w];
        const int b = unusedblossoms.back();
        unusedblossoms.pop_back();
        blossombase[b] = base;
        blossomparent[b] = -1;
        blossomparent[bb] = b;
        std::vector<int> path;
        std::vector<int> endps;
        while (bv != bb) {
            blossomparent[bv] = b;
            path.push_back(bv);
            endps.push_back(labelend[bv]);
            assert(labelend[bv] >= 0);
            v = endpoint[labelend[bv]];
            bv = inblossom[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend[bw] ^ 1);
            assert(labelend[bw] >= 0);
            w = endpoint[labelend[bw]];
            bw = inblossom[w];
        }
        blossomchilds[b] = std::move(path);
        blossomendps[b] = std::move(endps);
        label[b] = 1;
        labelend[b] = labelend[bb];
        dualvar[b] = 0;
        std::vector<int> leaves;
        blossom_leaves(b, leaves);
        for (const int leaf : leaves) {
            if (label[inblossom[leaf]] == 2) queue.push_back(leaf);
            inblossom[leaf] = b;
        }
        // merge least-slack edges towards neighbouring S-blossoms
        std::vector<int> bestedgeto(2 * nvertex, -1);
        for (const int child : blossomchilds[b]) {
            std::vector<std::vector<int>> nblists;
            if (!blossombestedges[child]) {
                std::vector<int> childleaves;
                blossom_leaves(child, childleaves);
                for (const int x : childleaves) {
                    std::vector<int> ks;
                    ks.reserve(neighbend[x].size());
                    for (const int p : neighbend[x]) ks.push_back(p / 2);
                    nblists.push_back(std::move(ks));
                }
            } else {
                nblists.push_back(*blossombestedges[child]);
            }
            for (const auto& nblist : nblists) {
                for (const int ke : nblist) {
                    int i = edges[ke].u;
                    int j = edges[ke].v;
                    if (inblossom[j] == b) std::swap(i, j);
                    const int bj = inblossom[j];
                    if (bj != b && label[bj] == 1 &&
                        (bestedgeto[bj] == -1 || slack(ke) < slack(bestedgeto[bj])))
                        bestedgeto[bj] = ke;
                }
            }
            blossombestedges[child].reset();
            bestedge[child] = -1;
        }
        std::vector<int> kept;
        for (const int ke : bestedgeto)
            if (ke != -1) kept.push_back(ke);
        blossombestedges[b] = std::move(kept);
        bestedge[b] = -1;
        for (const int ke : *blossombestedges[b])
            if (bestedge[b] == -1 || slack(ke) < slack(bestedge[b])) bestedge[b] = ke;
    }

    void expand_blossom(int b, bool endstage) {
        for (const int s : blossomchilds[b]) {
            blossomparent[s] = -1;
            if (s < nvertex) {
                inblossom[s] = s;
            } else if (endstage && dualvar[s] == 0) {
                expand_blossom(s, endstage);
            } else {
                std::vector<int> leaves;
                blossom_leaves(s, leaves);
                for (const int leaf : leaves) inblossom[leaf] = s;
            }
        }
        if (!endstage && label[b] == 2) {
            // The expanding blossom sat on an alternating path; relabel the
            // even children T, the odd children S, walking from the entry
            // child towards the base.
            assert(labelend[b] >= 0);
            const int entrychild = inblossom[endpoint[labelend[b] ^ 1]];
            int j = static_cast<int>(std::find(blossomchilds[b].begin(), blossomchilds[b].end(),
                                               entrychild) -
                                     blossomchilds[b].begin());
            int jstep;
            int endptrick;
            if (j & 1) {
                j -= static_cast<int>(blossomchilds[b].size());
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            int p = labelend[b];
            while (j != 0) {
                label[endpoint[p ^ 1]] = 0;
                label[endpoint[endp_at(b, j - endptrick) ^ endptrick ^ 1]] = 0;
                assign_label(endpoint[p ^ 1], 2, p);
                allowedge[endp_at(b, j - endptrick) / 2] = true;
                j += jstep;
                p = endp_at(b, j - endptrick) ^ endptrick;
                allowedge[p / 2] = true;
                j += jstep;
            }
            // the base child keeps label T but no step through its mate
            const int bv = child_at(b, j);
            label[endpoint[p ^ 1]] = label[bv] = 2;
            labelend[endpoint[p ^ 1]] = labelend[bv] = p;
            bestedge[bv] = -1;
            j += jstep;
            while (child_at(b, j) != entrychild) {
                const int bw = child_at(b, j);
                if (label[bw] == 1) {
                    j += jstep;
                    continue;
                }
                std::vector<int> leaves;
                blossom_leaves(bw, leaves);
                int labeled = -1;
                for (const int leaf : leaves) {
                    if (label[leaf] != 0) {
                        labeled = leaf;
                        break;
                    }
                }
                if (labeled != -1) {
                    assert(label[labeled] == 2);
                    assert(inblossom[labeled] == bw);
                    label[labeled] = 0;
                    label[endpoint[mate[blossombase[bw]]]] = 0;
                    assign_label(labeled, 2, labelend[labeled]);
                }
                j += jstep;
            }
        }
        label[b] = -1;
        labelend[b] = -1;
        blossomchilds[b].clear();
        blossomendps[b].clear();
        blossombase[b] = -1;
        blossombestedges[b].reset();
        bestedge[b] = -1;
        unusedblossoms.push_back(b);
    }

    // Swap matched/unmatched edges over the alternating path through
    // blossom b between vertex v and the blossom base.
    void augment_blossom(int b, int v) {
        int t = v;
        while (blossomparent[t] != b) t = blossomparent[t];
        if (t >= nvertex) augment_blossom(t, v);
        const int i = static_cast<int>(
            std::find(blossomchilds[b].begin(), blossomchilds[b].end(), t) -
            blossomchilds[b].begin());
        int j = i;
        int jstep;
        int endptrick;
        if (i & 1) {
            j -= static_cast<int>(blossomchilds[b].size());
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            int tt = child_at(b, j);
            const int p = endp_at(b, j - endptrick) ^ endptrick;
            if (tt >= nvertex) augment_blossom(tt, endpoint[p]);
            j += jstep;
            tt = child_at(b, j);
            if (tt >= nvertex) augment_blossom(tt, endpoint[p ^ 1]);
            mate[endpoint[p]] = p ^ 1;
            mate[endpoint[p ^ 1]] = p;
        }
        std::rotate(blossomchilds[b].begin(), blossomchilds[b].begin() + i,
                    blossomchilds[b].end());
        std::rotate(blossomendps[b].begin(), blossomendps[b].begin() + i,
                    blossomendps[b].end());
        blossombase[b] = blossombase[blossomchilds[b][0]];
        assert(blossombase[b] == v);
    }

    void augment_matching(int k) {
        const int iv = edges[k].u;
        const int iw = edges[k].v;
        const std::pair<int, int> starts[2] = {{iv, 2 * k + 1}, {iw, 2 * k}};
        for (const auto& [s0, p0] : starts) {
            int s = s0;
            int p = p0;
            while (true) {
                const int bs = inblossom[s];
                assert(label[bs] == 1);
                assert(labelend[bs] == mate[blossombase[bs]]);
                if (bs >= nvertex) augment_blossom(bs, s);
                mate[s] = p;
                if (labelend[bs] == -1) break; // root of the tree
                const int t = endpoint[labelend[bs]];
                const int bt = inblossom[t];
                assert(label[bt] == 2);
                assert(labelend[bt] >= 0);
                s = endpoint[labelend[bt]];
                const int j = endpoint[labelend[bt] ^ 1];
                assert(blossombase[bt] == t);
                if (bt >= nvertex) augment_blossom(bt, j);
                mate[j] = labelend[bt];
                p = labelend[bt] ^ 1;
            }
        }
    }

    // Optimality certificate: non-negative duals, non-negative slack on all
    // edges (counting blossom duals on shared ancestors), zero slack on
    // matched edges, zero dual on exposed vertices, and full blossoms where
    // the blossom dual is positive.
    void verify_optimum() const {
        for (int v = 0; v < nvertex; ++v)
            if (dualvar[v] < 0) throw std::logic_error("matching certificate: negative vertex dual");
        for (int b = nvertex; b < 2 * nvertex; ++b)
            if (dualvar[b] < 0) throw std::logic_error("matching certificate: negative blossom dual");
        for (int k = 0; k < nedge; ++k) {
            Rational s = slack(k);
            std::vector<int> ichain{edges[k].u};
            std::vector<int> jchain{edges[k].v};
            while (blossomparent[ichain.back()] != -1) ichain.push_back(blossomparent[ichain.back()]);
            while (blossomparent[jchain.back()] != -1) jchain.push_back(blossomparent[jchain.back()]);
            std::reverse(ichain.begin(), ichain.end());
            std::reverse(jchain.begin(), jchain.end());
            for (std::size_t t = 0; t < std::min(ichain.size(), jchain.size()); ++t) {
                if (ichain[t] != jchain[t]) break;
                s += dualvar[ichain[t]] * 2;
            }
            if (s < 0) throw std::logic_error("matching certificate: negative slack");
            const bool mi = mate[edges[k].u] / 2 == k && mate[edges[k].u] >= 0;
            const bool mj = mate[edges[k].v] / 2 == k && mate[edges[k].v] >= 0;
            if (mi || mj) {
                if (!(mi && mj)) throw std::logic_error("matching certificate: half-matched edge");
                if (s != 0) throw std::logic_error("matching certificate: matched edge with slack");
            }
        }
        for (int v = 0; v < nvertex; ++v)
            if (mate[v] < 0 && dualvar[v] != 0)
                throw std::logic_error("matching certificate: exposed vertex with positive dual");
        for (int b = nvertex; b < 2 * nvertex; ++b) {
            if (blossombase[b] >= 0 && dualvar[b] > 0) {
                if (blossomendps[b].size() % 2 != 1)
                    throw std::logic_error("matching certificate: even blossom");
                for (std::size_t t = 1; t < blossomendps[b].size(); t += 2) {
                    const int p = blossomendps[b][t];
                    if (mate[endpoint[p]] != (p ^ 1) || mate[endpoint[p ^ 1]] != p)
                        throw std::logic_error("matching certificate: blossom not full");
                }
            }
        }
    }
};

Matching collect_matching(const std::vector<WeightedEdge>& all_edges,
                          const std::vector<int>& matched_edge_indices) {
    Matching m;
    for (const int k : matched_edge_indices) {
        WeightedEdge e = all_edges[k];
        if (e.u > e.v) std::swap(e.u, e.v);
        m.edges.push_back(e);
    }
    std::sort(m.edges.begin(), m.edges.end(),
              [](const WeightedEdge& a, const WeightedEdge& b) {
                  return std::pair(a.u, a.v) < std::pair(b.u, b.v);
              });
    m.weight = 0;
    for (const auto& e : m.edges) m.weight += e.weight;
    return m;
}

} // namespace

WeightedGraph make_graph(int vertex_count, std::vector<WeightedEdge> edges) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges) {
        if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop");
        const auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second) throw std::invalid_argument("duplicate edge");
    }
    return WeightedGraph{vertex_count, std::move(edges)};
}

Matching max_weight_matching(const WeightedGraph& graph) {
    if (graph.edges.empty()) return Matching{};
    BlossomMatcher matcher(graph.vertex_count, graph.edges);
    matcher.solve();
    return collect_matching(graph.edges, matcher.matched_edges());
}

int max_matching_cardinality(const WeightedGraph& graph) {
    if (graph.edges.empty()) return 0;
    std::vector<WeightedEdge> unit = graph.edges;
    for (auto& e : unit) e.weight = 1;
    BlossomMatcher matcher(graph.vertex_count, unit);
    matcher.solve();
    return static_cast<int>(matcher.matched_edges().size());
}

Matching max_weight_matching_of_size(const WeightedGraph& graph, int q) {
    if (q < 0) throw std::invalid_argument("matching size must be non-negative");
    if (q == 0) return Matching{};
    if (max_matching_cardinality(graph) < q)
        throw InfeasibleError("graph has no matching of size " + std::to_string(q));

    // Normalize to non-negative weights first; a uniform shift changes every
    // size-q matching by the same amount, so the argmax is unchanged.
    Rational low = 0;
    for (const auto& e : graph.edges) low = std::min(low, e.weight);
    Rational shifted_max = 0;
    for (const auto& e : graph.edges) shifted_max = std::max(shifted_max, e.weight - low);

    const int edge_count = static_cast<int>(graph.edges.size());
    const Rational z = shifted_max * edge_count + 1;
    const int original_vertices = graph.vertex_count;
    const int dummies = original_vertices - 2 * q;

    std::vector<WeightedEdge> extended;
    Rational shifted_total = 0;
    for (const auto& e : graph.edges) {
        const Rational w = (e.weight - low) + z;
        extended.push_back({e.u, e.v, w});
        shifted_total += w;
    }
    const Rational big = shifted_total + 1;
    for (int d = 0; d < dummies; ++d)
        for (int u = 0; u < original_vertices; ++u)
            extended.push_back({original_vertices + d, u, big});

    BlossomMatcher matcher(original_vertices + dummies, extended);
    matcher.solve();

    std::vector<int> kept;
    for (const int k : matcher.matched_edges())
        if (extended[k].u < original_vertices && extended[k].v < original_vertices)
            kept.push_back(k);
    if (static_cast<int>(kept.size()) != q)
        throw std::logic_error("fixed-size matching reduction returned wrong cardinality");
    return collect_matching(graph.edges, kept);
}

Matching min_weight_perfect_bipartite_matching(int left_count, int right_count,
                                               const std::vector<WeightedEdge>& edges) {
    if (left_count < 0 || right_count < 0)
        throw std::invalid_argument("negative side size");
    const bool transposed = left_count > right_count;
    const int n = transposed ? right_count : left_count;  // side to saturate
    const int m = transposed ? left_count : right_count;
    if (n == 0) return Matching{};

    Rational abs_sum = 0;
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges) {
        if (e.u < 0 || e.u >= left_count || e.v < 0 || e.v >= right_count)
            throw std::invalid_argument("bipartite edge endpoint out of range");
        if (!seen.insert({e.u, e.v}).second)
            throw std::invalid_argument("duplicate bipartite edge");
        abs_sum += e.weight < 0 ? -e.weight : e.weight;
    }
    const Rational missing = abs_sum * 2 + 1; // dominates any feasible total

    // cost[i][j], 1-indexed, rows = saturated side
    std::vector<std::vector<Rational>> cost(n + 1, std::vector<Rational>(m + 1, missing));
    for (const auto& e : edges) {
        const int i = transposed ? e.v : e.u;
        const int j = transposed ? e.u : e.v;
        cost[i + 1][j + 1] = e.weight;
    }

    // shortest augmenting paths with potentials; minv == nullopt plays +inf
    std::vector<Rational> u(n + 1, Rational(0));
    std::vector<Rational> v(m + 1, Rational(0));
    std::vector<int> p(m + 1, 0);
    std::vector<int> way(m + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<std::optional<Rational>> minv(m + 1);
        std::vector<bool> used(m + 1, false);
        do {
            used[j0] = true;
            const int i0 = p[j0];
            int j1 = -1;
            std::optional<Rational> delta;
            for (int j = 1; j <= m; ++j) {
                if (used[j]) continue;
                const Rational cur = cost[i0][j] - u[i0] - v[j];
                if (!minv[j] || cur < *minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (!delta || *minv[j] < *delta) {
                    delta = *minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= m; ++j) {
                if (used[j]) {
                    u[p[j]] += *delta;
                    v[j] -= *delta;
                } else if (minv[j]) {
                    *minv[j] -= *delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    Matching result;
    for (int j = 1; j <= m; ++j) {
        if (p[j] == 0) continue;
        if (cost[p[j]][j] == missing)
            throw InfeasibleError("bipartite graph has no matching saturating the smaller side");
        const int li = transposed ? j - 1 : p[j] - 1;
        const int ri = transposed ? p[j] - 1 : j - 1;
        result.edges.push_back({li, left_count + ri, cost[p[j]][j]});
    }
    std::sort(result.edges.begin(), result.edges.end(),
              [](const WeightedEdge& a, const WeightedEdge& b) {
                  return std::pair(a.u, a.v) < std::pair(b.u, b.v);
              });
    result.weight = 0;
    for (const auto& e : result.edges) result.weight += e.weight;
    return result;
}

} // namespace minpot
