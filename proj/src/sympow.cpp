#include "fpp/sympow.hpp"

#include "fpp/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace fpp {

// ------------------------------------------------------ SimplicialComplex

SimplicialComplex::SimplicialComplex(std::vector<Face> faces) : faces_(std::move(faces))
{
    std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });

    std::set<int> verts;
    for (const auto& f : faces_)
        verts.insert(f.begin(), f.end());
    vertices_.assign(verts.begin(), verts.end());

    // A face is maximal when no face one dimension up contains it.
    std::set<Face> contained;
    for (const auto& f : faces_)
        for (std::size_t drop = 0; f.size() > 1 && drop < f.size(); ++drop) {
            Face sub = f;
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
            contained.insert(std::move(sub));
        }
    for (const auto& f : faces_)
        if (!contained.count(f))
            facets_.push_back(f);
    std::sort(facets_.begin(), facets_.end());
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> facets, std::size_t max_facet_size)
{
    std::set<Face> faces;
    for (auto& f : facets) {
        if (f.empty())
            throw Error(ErrorKind::validation, "empty facet");
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw Error(ErrorKind::validation, "facet repeats vertex " + std::to_string(*std::adjacent_find(f.begin(), f.end())));
        if (f.size() > max_facet_size)
            throw Error(ErrorKind::capacity, "facet with " + std::to_string(f.size()) + " vertices exceeds the limit of "
                                                 + std::to_string(max_facet_size));
        const std::uint64_t subsets = std::uint64_t{1} << f.size();
        for (std::uint64_t mask = 1; mask < subsets; ++mask) {
            Face sub;
            for (std::size_t i = 0; i < f.size(); ++i)
                if ((mask >> i) & 1U)
                    sub.push_back(f[i]);
            faces.insert(std::move(sub));
        }
    }
    if (faces.empty())
        throw Error(ErrorKind::validation, "complex has no faces");
    return SimplicialComplex(std::vector<Face>(faces.begin(), faces.end()));
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<Face> faces)
{
    std::set<Face> set;
    for (auto& f : faces) {
        if (f.empty())
            throw Error(ErrorKind::validation, "empty face");
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw Error(ErrorKind::validation, "face repeats a vertex");
        set.insert(f);
    }
    if (set.empty())
        throw Error(ErrorKind::validation, "complex has no faces");
    for (const auto& f : set) {
        for (std::size_t drop = 0; f.size() > 1 && drop < f.size(); ++drop) {
            Face sub = f;
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
            if (!set.count(sub)) {
                std::string s;
                for (int v : sub)
                    s += (s.empty() ? "" : " ") + std::to_string(v);
                throw Error(ErrorKind::validation, "faces not closed under subsets: missing {" + s + "}");
            }
        }
    }
    return SimplicialComplex(std::vector<Face>(set.begin(), set.end()));
}

int SimplicialComplex::dimension() const { return static_cast<int>(faces_.back().size()) - 1; }

std::vector<std::uint64_t> SimplicialComplex::f_vector() const
{
    std::vector<std::uint64_t> f(static_cast<std::size_t>(dimension()) + 1, 0);
    for (const auto& face : faces_)
        ++f[face.size() - 1];
    return f;
}

std::int64_t SimplicialComplex::euler() const
{
    std::int64_t chi = 0;
    const auto f = f_vector();
    for (std::size_t d = 0; d < f.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(f[d]);
    return chi;
}

SimplicialComplex parse_complex(std::string_view text, std::string_view source)
{
    auto fail = [&](ErrorKind kind, std::size_t line, std::size_t col, const std::string& msg) {
        std::ostringstream os;
        os << source << ':' << line << ':' << col << ": " << msg;
        return Error(kind, os.str());
    };

    std::vector<Face> facets;
    std::size_t pos = 0;
    std::size_t line = 0;
    while (pos < text.size()) {
        ++line;
        const auto nl = text.find('\n', pos);
        const auto end = nl == std::string_view::npos ? text.size() : nl;
        const std::string_view row = text.substr(pos, end - pos);
        pos = end + 1;

        const auto first = row.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || row[first] == '#')
            continue;

        Face facet;
        std::size_t i = 0;
        while (i < row.size()) {
            if (row[i] == ' ' || row[i] == '\t' || row[i] == '\r') {
                ++i;
                continue;
            }
            int value = 0;
            const auto [ptr, ec] = std::from_chars(row.data() + i, row.data() + row.size(), value);
            const auto len = static_cast<std::size_t>(ptr - (row.data() + i));
            const bool boundary = i + len == row.size() || row[i + len] == ' ' || row[i + len] == '\t'
                || row[i + len] == '\r';
            if (ec != std::errc{} || !boundary)
                throw fail(ErrorKind::parse, line, i + 1, "expected an integer vertex label");
            if (std::find(facet.begin(), facet.end(), value) != facet.end())
                throw fail(ErrorKind::validation, line, i + 1, "vertex " + std::to_string(value) + " repeated in facet");
            facet.push_back(value);
            i += len;
        }
        facets.push_back(std::move(facet));
    }
    if (facets.empty())
        throw fail(ErrorKind::validation, line + 1, 1, "no facets");
    try {
        return SimplicialComplex::from_facets(std::move(facets));
    } catch (const Error& e) {
        throw Error(e.kind(), std::string(source) + ": " + e.what());
    }
}

SimplicialComplex read_complex_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::parse, path + ": cannot open complex file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_complex(ss.str(), path);
}

SimplicialComplex boundary_of_simplex(int dim)
{
    if (dim < 1)
        throw Error(ErrorKind::domain, "boundary of a simplex needs dimension >= 1");
    std::vector<Face> facets;
    for (int drop = 0; drop <= dim; ++drop) {
        Face f;
        for (int v = 0; v <= dim; ++v)
            if (v != drop)
                f.push_back(v + 1);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex rp2_six_vertex()
{
    // Hemi-icosahedron.
    return SimplicialComplex::from_facets({
        {1, 2, 4}, {1, 2, 6}, {1, 3, 4}, {1, 3, 5}, {1, 5, 6},
        {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {3, 4, 6}, {4, 5, 6},
    });
}

SurfaceCheck check_closed_surface(const SimplicialComplex& k)
{
    SurfaceCheck c;
    c.euler = k.euler();

    c.pure_2d = k.dimension() == 2;
    for (const auto& f : k.facets())
        if (f.size() != 3)
            c.pure_2d = false;

    std::map<Face, int> edge_triangles;
    for (const auto& f : k.faces())
        if (f.size() == 2)
            edge_triangles[f] = 0;
    for (const auto& f : k.faces())
        if (f.size() == 3)
            for (std::size_t drop = 0; drop < 3; ++drop) {
                Face e = f;
                e.erase(e.begin() + static_cast<std::ptrdiff_t>(drop));
                ++edge_triangles[e];
            }
    c.edges_in_two_triangles = !edge_triangles.empty();
    for (const auto& [e, count] : edge_triangles)
        if (count != 2)
            c.edges_in_two_triangles = false;

    // Link of v: the edges opposite v. It is a circle iff every link vertex has
    // degree two and the link graph is connected.
    c.links_are_circles = true;
    for (int v : k.vertices()) {
        std::map<int, std::vector<int>> adj;
        for (const auto& f : k.faces()) {
            if (f.size() != 3 || std::find(f.begin(), f.end(), v) == f.end())
                continue;
            Face opp;
            for (int u : f)
                if (u != v)
                    opp.push_back(u);
            adj[opp[0]].push_back(opp[1]);
            adj[opp[1]].push_back(opp[0]);
        }
        if (adj.size() < 3) {
            c.links_are_circles = false;
            break;
        }
        bool ok = true;
        for (const auto& [u, nbrs] : adj)
            if (nbrs.size() != 2)
                ok = false;
        std::set<int> seen{adj.begin()->first};
        std::vector<int> stack{adj.begin()->first};
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (seen.insert(w).second)
                    stack.push_back(w);
        }
        if (!ok || seen.size() != adj.size()) {
            c.links_are_circles = false;
            break;
        }
    }

    std::map<int, std::vector<int>> graph;
    for (int v : k.vertices())
        graph[v];
    for (const auto& f : k.faces())
        if (f.size() == 2) {
            graph[f[0]].push_back(f[1]);
            graph[f[1]].push_back(f[0]);
        }
    std::set<int> seen{k.vertices().front()};
    std::vector<int> stack{k.vertices().front()};
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w : graph[u])
            if (seen.insert(w).second)
                stack.push_back(w);
    }
    c.connected = seen.size() == k.vertices().size();
    return c;
}

// ------------------------------------------------------------------ posets

Poset Poset::from_relations(std::vector<int> rank, std::vector<std::vector<std::uint32_t>> below)
{
    if (rank.size() != below.size())
        throw Error(ErrorKind::dimension, "poset rank and relation lists differ in length");
    for (std::size_t e = 0; e < below.size(); ++e) {
        std::sort(below[e].begin(), below[e].end());
        for (auto b : below[e])
            if (b >= e)
                throw Error(ErrorKind::validation, "poset elements are not listed in a linear extension");
    }
    Poset p;
    p.rank_ = std::move(rank);
    p.below_ = std::move(below);
    return p;
}

Poset face_poset(const SimplicialComplex& k)
{
    const auto& faces = k.faces();
    std::map<Face, std::uint32_t> index;
    for (std::size_t i = 0; i < faces.size(); ++i)
        index.emplace(faces[i], static_cast<std::uint32_t>(i));

    std::vector<int> rank;
    std::vector<std::vector<std::uint32_t>> below(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) {
        const Face& f = faces[i];
        rank.push_back(static_cast<int>(f.size()) - 1);
        const std::uint64_t full = (std::uint64_t{1} << f.size()) - 1;
        for (std::uint64_t mask = 1; mask < full; ++mask) {
            Face sub;
            for (std::size_t b = 0; b < f.size(); ++b)
                if ((mask >> b) & 1U)
                    sub.push_back(f[b]);
            below[i].push_back(index.at(sub));
        }
    }
    return Poset::from_relations(std::move(rank), std::move(below));
}

Poset product_poset(const Poset& p, const Poset& q, std::size_t cap)
{
    const std::size_t size = p.size() * q.size();
    if (size > cap)
        throw Error(ErrorKind::capacity, "product poset has " + std::to_string(size) + " elements, over the cap of "
                                             + std::to_string(cap));
    std::vector<int> rank(size);
    std::vector<std::vector<std::uint32_t>> below(size);
    for (std::size_t a = 0; a < p.size(); ++a) {
        for (std::size_t b = 0; b < q.size(); ++b) {
            const std::size_t e = a * q.size() + b;
            rank[e] = p.rank(a) + q.rank(b);
            std::vector<std::uint32_t> left = p.below(a);
            left.push_back(static_cast<std::uint32_t>(a));
            std::vector<std::uint32_t> right = q.below(b);
            right.push_back(static_cast<std::uint32_t>(b));
            for (auto x : left)
                for (auto y : right)
                    if (x != a || y != b)
                        below[e].push_back(static_cast<std::uint32_t>(x * q.size() + y));
        }
    }
    return Poset::from_relations(std::move(rank), std::move(below));
}

std::vector<std::uint64_t> order_complex_chain_counts(const Poset& p, const std::vector<bool>& keep, std::size_t cap)
{
    if (p.size() > cap)
        throw Error(ErrorKind::capacity, "poset has " + std::to_string(p.size()) + " elements, over the cap of "
                                             + std::to_string(cap));
    if (keep.size() != p.size())
        throw Error(ErrorKind::dimension, "element filter does not match the poset size");

    // ending[e][j] = chains with j + 1 elements whose maximum is e.
    std::vector<std::vector<std::uint64_t>> ending(p.size());
    std::vector<std::uint64_t> totals;
    for (std::size_t e = 0; e < p.size(); ++e) {
        if (!keep[e])
            continue;
        auto& mine = ending[e];
        mine.push_back(1);
        for (auto b : p.below(e)) {
            const auto& theirs = ending[b];
            if (mine.size() < theirs.size() + 1)
                mine.resize(theirs.size() + 1, 0);
            for (std::size_t j = 0; j < theirs.size(); ++j)
                if (__builtin_add_overflow(mine[j + 1], theirs[j], &mine[j + 1]))
                    throw Error(ErrorKind::capacity, "chain count overflows 64 bits");
        }
        if (totals.size() < mine.size())
            totals.resize(mine.size(), 0);
        for (std::size_t j = 0; j < mine.size(); ++j)
            if (__builtin_add_overflow(totals[j], mine[j], &totals[j]))
                throw Error(ErrorKind::capacity, "chain count overflows 64 bits");
    }
    return totals;
}

std::vector<std::uint64_t> order_complex_chain_counts(const Poset& p, std::size_t cap)
{
    return order_complex_chain_counts(p, std::vector<bool>(p.size(), true), cap);
}

std::int64_t euler_sym_square(std::int64_t chi)
{
    if (chi > 3'000'000'000LL || chi < -3'000'000'000LL)
        throw Error(ErrorKind::domain, "Euler characteristic out of supported range");
    return (chi * chi + chi) / 2;
}

namespace {

std::int64_t alternating_sum(const std::vector<std::uint64_t>& counts)
{
    __int128 sum = 0;
    for (std::size_t d = 0; d < counts.size(); ++d)
        sum += (d % 2 == 0 ? 1 : -1) * static_cast<__int128>(counts[d]);
    if (sum > INT64_MAX || sum < INT64_MIN)
        throw Error(ErrorKind::capacity, "Euler characteristic overflows 64 bits");
    return static_cast<std::int64_t>(sum);
}

}  // namespace

SymSquareReport sym_square_oracle(const SimplicialComplex& k, std::size_t cap)
{
    const Poset faces = face_poset(k);
    const Poset square = product_poset(faces, faces, cap);
    const std::size_t n = faces.size();

    // The swap (a, b) -> (b, a) preserves the order, so a chain it maps to
    // itself is fixed elementwise: fixed chains are the chains of diagonal pairs.
    std::vector<bool> diagonal(square.size(), false);
    for (std::size_t a = 0; a < n; ++a)
        diagonal[a * n + a] = true;

    const auto total = order_complex_chain_counts(square, cap);
    auto fixed = order_complex_chain_counts(square, diagonal, cap);
    fixed.resize(total.size(), 0);

    SymSquareReport r;
    r.chi_X = k.euler();
    r.chi_XxX = alternating_sum(total);
    r.chi_diagonal = alternating_sum(fixed);
    r.free_part_even = true;
    std::vector<std::uint64_t> orbits;
    for (std::size_t d = 0; d < total.size(); ++d) {
        const std::uint64_t free = total[d] - fixed[d];
        if (fixed[d] > total[d] || free % 2 != 0)
            r.free_part_even = false;
        ChainCounts c{total[d], fixed[d], fixed[d] + free / 2};
        orbits.push_back(c.orbit);
        r.per_dimension.push_back(c);
    }
    r.chi_quotient = alternating_sum(orbits);
    r.formula = euler_sym_square(r.chi_X);
    r.identity_holds = 2 * r.chi_quotient == r.chi_X + r.chi_X * r.chi_X;
    r.formula_agrees = r.chi_quotient == r.formula;
    return r;
}

}  // namespace fpp
