#include "hboot/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace hboot {

namespace {

// Colours are 0..k-1 and the cell order is their numeric order. Splits every
// cell by neighbour counts into each cell until the partition is equitable;
// fragments are ordered by their count vectors, which keeps the result
// equivariant under relabeling. Returns the final cell count.
int refine(const Graph& g, std::vector<int>& colour, int k)
{
    const int n = g.order();
    std::vector<int> counts;
    std::vector<VertexSet> cells;
    std::vector<std::vector<int>> members;
    while (k < n) {
        cells.assign(static_cast<std::size_t>(k), VertexSet{});
        members.assign(static_cast<std::size_t>(k), {});
        for (int v = 0; v < n; ++v) {
            cells[colour[v]].set(v);
            members[colour[v]].push_back(v);
        }
        counts.assign(static_cast<std::size_t>(n) * k, 0);
        for (int v = 0; v < n; ++v) {
            if (members[colour[v]].size() == 1)
                continue;
            for (int c = 0; c < k; ++c)
                counts[static_cast<std::size_t>(v) * k + c] = (g.neighbours(v) & cells[c]).count();
        }
        auto key_less = [&](int a, int b) {
            auto pa = counts.begin() + static_cast<std::ptrdiff_t>(a) * k;
            auto pb = counts.begin() + static_cast<std::ptrdiff_t>(b) * k;
            return std::lexicographical_compare(pa, pa + k, pb, pb + k);
        };
        auto key_equal = [&](int a, int b) {
            auto pa = counts.begin() + static_cast<std::ptrdiff_t>(a) * k;
            auto pb = counts.begin() + static_cast<std::ptrdiff_t>(b) * k;
            return std::equal(pa, pa + k, pb);
        };
        int next = 0;
        for (auto& cell : members) {
            if (cell.size() > 1)
                std::sort(cell.begin(), cell.end(), key_less);
            for (std::size_t i = 0; i < cell.size(); ++i) {
                if (i > 0 && !key_equal(cell[i - 1], cell[i]))
                    ++next;
                colour[cell[i]] = next;
            }
            ++next;
        }
        if (next == k)
            break;
        k = next;
    }
    return k;
}

// Gives v its own cell placed directly before the rest of its old cell.
void individualise(std::vector<int>& colour, int v)
{
    const int c = colour[v];
    for (auto& x : colour)
        if (x >= c)
            ++x;
    colour[v] = c;
}

int first_nontrivial_cell(const std::vector<int>& colour, int k)
{
    std::vector<int> size(static_cast<std::size_t>(k), 0);
    for (int c : colour)
        ++size[c];
    for (int c = 0; c < k; ++c)
        if (size[c] > 1)
            return c;
    return -1;
}

std::vector<int> cell_members(const std::vector<int>& colour, int c)
{
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(colour.size()); ++v)
        if (colour[v] == c)
            out.push_back(v);
    return out;
}

bool are_twins(const Graph& g, int u, int v)
{
    VertexSet nu = g.neighbours(u);
    VertexSet nv = g.neighbours(v);
    nu.reset(v);
    nv.reset(u);
    return nu == nv;
}

// Transpositions (u v) for each vertex and the next larger twin of it.
std::vector<std::vector<int>> twin_generators(const Graph& g)
{
    const int n = g.order();
    std::vector<std::vector<int>> gens;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (are_twins(g, u, v)) {
                std::vector<int> p(static_cast<std::size_t>(n));
                std::iota(p.begin(), p.end(), 0);
                std::swap(p[u], p[v]);
                gens.push_back(std::move(p));
                break;
            }
    return gens;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), generators_(twin_generators(g)) {}

    CanonicalForm run()
    {
        std::vector<int> colour(static_cast<std::size_t>(n_), 0);
        int k = n_ == 0 ? 0 : refine(g_, colour, 1);
        std::vector<int> prefix;
        descend(colour, k, prefix);
        CanonicalForm form;
        form.order = best_order_;
        form.bytes = {static_cast<std::uint8_t>(n_ >> 8), static_cast<std::uint8_t>(n_ & 0xff)};
        form.bytes.insert(form.bytes.end(), best_cert_.begin(), best_cert_.end());
        return form;
    }

private:
    std::vector<std::uint8_t> certificate(const std::vector<int>& order) const
    {
        std::vector<std::uint8_t> out;
        std::uint8_t acc = 0;
        int bits = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                acc = static_cast<std::uint8_t>((acc << 1) | (g_.adjacent(order[i], order[j]) ? 1 : 0));
                if (++bits == 8) {
                    out.push_back(acc);
                    acc = 0;
                    bits = 0;
                }
            }
        if (bits > 0)
            out.push_back(static_cast<std::uint8_t>(acc << (8 - bits)));
        return out;
    }

    void leaf(const std::vector<int>& colour)
    {
        std::vector<int> order(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v)
            order[colour[v]] = v;
        auto cert = certificate(order);
        if (best_order_.empty() || cert > best_cert_) {
            best_cert_ = std::move(cert);
            best_order_ = std::move(order);
        } else if (cert == best_cert_) {
            std::vector<int> gamma(static_cast<std::size_t>(n_));
            for (int i = 0; i < n_; ++i)
                gamma[order[i]] = best_order_[i];
            generators_.push_back(std::move(gamma));
        }
    }

    void descend(std::vector<int>& colour, int k, std::vector<int>& prefix)
    {
        const int target = first_nontrivial_cell(colour, k);
        if (target < 0) {
            leaf(colour);
            return;
        }
        std::vector<int> explored;
        for (int v : cell_members(colour, target)) {
            if (!explored.empty()) {
                UnionFind uf(n_);
                for (const auto& gamma : generators_) {
                    bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return gamma[p] == p; });
                    if (!fixes)
                        continue;
                    for (int x = 0; x < n_; ++x)
                        uf.unite(x, gamma[x]);
                }
                int root = uf.find(v);
                if (std::any_of(explored.begin(), explored.end(), [&](int w) { return uf.find(w) == root; }))
                    continue;
            }
            explored.push_back(v);
            auto child = colour;
            individualise(child, v);
            int ck = refine(g_, child, k + 1);
            prefix.push_back(v);
            descend(child, ck, prefix);
            prefix.pop_back();
        }
    }

    const Graph& g_;
    int n_;
    std::vector<std::vector<int>> generators_;
    std::vector<std::uint8_t> best_cert_;
    std::vector<int> best_order_;
};

// Sizes of the cells followed by the quotient matrix of an equitable partition.
std::vector<int> quotient_signature(const Graph& g, const std::vector<int>& colour, int k)
{
    std::vector<VertexSet> cells(static_cast<std::size_t>(k));
    std::vector<int> rep(static_cast<std::size_t>(k), -1);
    for (int v = 0; v < g.order(); ++v) {
        cells[colour[v]].set(v);
        if (rep[colour[v]] < 0)
            rep[colour[v]] = v;
    }
    std::vector<int> sig;
    sig.reserve(static_cast<std::size_t>(k) * (k + 1));
    for (int c = 0; c < k; ++c)
        sig.push_back(cells[c].count());
    for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d)
            sig.push_back((g.neighbours(rep[c]) & cells[d]).count());
    return sig;
}

class IsomorphismSearch {
public:
    IsomorphismSearch(const Graph& a, const Graph& b) : a_(a), b_(b), n_(a.order()) {}

    std::optional<std::vector<int>> run(std::vector<int> ca, int ka, std::vector<int> cb, int kb)
    {
        ka = refine(a_, ca, ka);
        kb = refine(b_, cb, kb);
        if (ka != kb || quotient_signature(a_, ca, ka) != quotient_signature(b_, cb, kb))
            return std::nullopt;
        return descend(ca, cb, ka);
    }

private:
    std::optional<std::vector<int>> descend(const std::vector<int>& ca, const std::vector<int>& cb, int k)
    {
        const int target = first_nontrivial_cell(ca, k);
        if (target < 0) {
            std::vector<int> phi(static_cast<std::size_t>(n_));
            std::vector<int> b_of_colour(static_cast<std::size_t>(n_));
            for (int v = 0; v < n_; ++v)
                b_of_colour[cb[v]] = v;
            for (int v = 0; v < n_; ++v)
                phi[v] = b_of_colour[ca[v]];
            for (const auto& e : a_.edges())
                if (!b_.adjacent(phi[e.u], phi[e.v]))
                    return std::nullopt;
            return phi;
        }
        const int x = cell_members(ca, target).front();
        auto child_a = ca;
        individualise(child_a, x);
        const int ka = refine(a_, child_a, k + 1);
        const auto sig_a = quotient_signature(a_, child_a, ka);

        std::vector<int> tried;
        for (int y : cell_members(cb, target)) {
            if (std::any_of(tried.begin(), tried.end(), [&](int w) { return are_twins(b_, w, y); }))
                continue;
            tried.push_back(y);
            auto child_b = cb;
            individualise(child_b, y);
            const int kb = refine(b_, child_b, k + 1);
            if (kb != ka || quotient_signature(b_, child_b, kb) != sig_a)
                continue;
            if (auto phi = descend(child_a, child_b, ka))
                return phi;
        }
        return std::nullopt;
    }

    const Graph& a_;
    const Graph& b_;
    int n_;
};

// Maps arbitrary colour values to 0..k-1 using the sorted value set shared by
// both sides; returns false if the value multisets differ.
bool normalise_colours(std::span<const int> in_a, std::span<const int> in_b, int n, std::vector<int>& out_a,
                       std::vector<int>& out_b, int& k)
{
    if (in_a.empty() && in_b.empty()) {
        out_a.assign(static_cast<std::size_t>(n), 0);
        out_b.assign(static_cast<std::size_t>(n), 0);
        k = n > 0 ? 1 : 0;
        return true;
    }
    if (static_cast<int>(in_a.size()) != n || static_cast<int>(in_b.size()) != n)
        throw ArgumentError("colour vector length does not match graph order");
    std::vector<int> sa(in_a.begin(), in_a.end());
    std::vector<int> sb(in_b.begin(), in_b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb)
        return false;
    sa.erase(std::unique(sa.begin(), sa.end()), sa.end());
    auto index = [&](int value) {
        return static_cast<int>(std::lower_bound(sa.begin(), sa.end(), value) - sa.begin());
    };
    out_a.resize(static_cast<std::size_t>(n));
    out_b.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        out_a[v] = index(in_a[v]);
        out_b[v] = index(in_b[v]);
    }
    k = static_cast<int>(sa.size());
    return true;
}

} // namespace

CanonicalForm canonical_form(const Graph& g)
{
    return CanonicalSearch(g).run();
}

Graph canonical_graph(const Graph& g)
{
    auto form = canonical_form(g);
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    for (int k = 0; k < g.order(); ++k)
        perm[form.order[k]] = k;
    return g.relabeled(perm);
}

std::optional<std::vector<int>> find_isomorphism(const Graph& a, std::span<const int> colours_a, const Graph& b,
                                                 std::span<const int> colours_b)
{
    if (a.order() != b.order() || a.size() != b.size())
        return std::nullopt;
    const int n = a.order();
    if (n == 0)
        return std::vector<int>{};
    std::vector<int> ca, cb;
    int k = 0;
    if (!normalise_colours(colours_a, colours_b, n, ca, cb, k))
        return std::nullopt;
    return IsomorphismSearch(a, b).run(std::move(ca), k, std::move(cb), k);
}

bool are_isomorphic(const Graph& a, const Graph& b)
{
    return find_isomorphism(a, {}, b, {}).has_value();
}

EdgeOrbits edge_orbits(const Graph& h)
{
    const auto edges = h.edges();
    const int n = h.order();
    EdgeOrbits out;
    out.orbit_of.assign(edges.size(), -1);

    auto anchored = [&](int first, int second) {
        std::vector<int> c(static_cast<std::size_t>(n), 0);
        c[first] = 1;
        c[second] = 2;
        return c;
    };
    auto edge_index = [&](const Edge& e) {
        return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
    };

    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (out.orbit_of[i] != -1)
            continue;
        const int orbit = static_cast<int>(out.representatives.size());
        const Edge rep = edges[i];
        out.representatives.push_back(rep);
        out.orbit_of[i] = orbit;
        const auto from = anchored(rep.u, rep.v);
        out.reversible.push_back(find_isomorphism(h, from, h, anchored(rep.v, rep.u)).has_value());

        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (out.orbit_of[j] != -1)
                continue;
            auto phi = find_isomorphism(h, from, h, anchored(edges[j].u, edges[j].v));
            if (!phi)
                phi = find_isomorphism(h, from, h, anchored(edges[j].v, edges[j].u));
            if (!phi)
                continue;
            // Images of every known orbit member under phi join the orbit too.
            for (std::size_t m = 0; m < edges.size(); ++m)
                if (out.orbit_of[m] == orbit) {
                    auto img = edge_index(Edge((*phi)[edges[m].u], (*phi)[edges[m].v]));
                    out.orbit_of[img] = orbit;
                }
            out.orbit_of[j] = orbit;
        }
    }
    return out;
}

} // namespace hboot
