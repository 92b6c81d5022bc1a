#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bicov/errors.hpp"
#include "bicov/linalg.hpp"

namespace bicov {

/// A finite group as an indexed Cayley table. The identity is always
/// relabelled to index 0 on construction; all structural invariants
/// (associativity, two-sided inverses) are checked eagerly.
struct GroupTable {
    std::size_t n = 0;
    std::vector<std::vector<int>> table; // table[i][j] = i∘j
    std::vector<int> inverse;
    std::vector<std::string> names; // optional, size n when present
    std::string name;               // optional group name

    static constexpr int e = 0;

    int op(int i, int j) const { return table[i][j]; }
    int inv(int i) const { return inverse[i]; }
    int conj(int g, int h) const { return op(op(g, h), inv(g)); } // g h g⁻¹

    std::string element_name(int i) const {
        if (!names.empty()) return names[i];
        return std::to_string(i);
    }
};

struct ConjugacyClass {
    int representative = 0;   // smallest member index
    std::vector<int> members; // sorted ascending
    std::size_t size() const { return members.size(); }
};

/// A matrix representation of a group: one degree×degree matrix per element.
struct Irrep {
    std::size_t degree = 0;
    std::vector<CMatrix> matrices; // indexed by element
    std::string label;
};

namespace detail {

inline void check_group_axioms(const std::vector<std::vector<int>>& t) {
    const std::size_t n = t.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (t[i].size() != n) throw ValidationError("group table is not square");
        for (int v : t[i])
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw ValidationError("group table entry out of range");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (t[t[i][j]][k] != t[i][t[j][k]]) {
                    std::ostringstream os;
                    os << "group table is not associative at (" << i << "," << j << "," << k << ")";
                    throw ValidationError(os.str());
                }
}

inline int find_identity(const std::vector<std::vector<int>>& t) {
    const std::size_t n = t.size();
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j)
            ok = t[e][j] == static_cast<int>(j) && t[j][e] == static_cast<int>(j);
        if (ok) return static_cast<int>(e);
    }
    throw ValidationError("group table has no identity element");
}

} // namespace detail

/// Validate a raw multiplication table and produce a GroupTable with the
/// identity relabelled to index 0 (swap with whatever index carried it).
inline GroupTable make_group(std::vector<std::vector<int>> table, std::vector<std::string> names = {},
                             std::string group_name = {}) {
    const std::size_t n = table.size();
    if (n == 0) throw ValidationError("group table is empty");
    detail::check_group_axioms(table);
    const int e = detail::find_identity(table);
    if (e != 0) {
        // relabel by the transposition (0 e)
        auto re = [&](int x) { return x == 0 ? e : (x == e ? 0 : x); };
        std::vector<std::vector<int>> t2(n, std::vector<int>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                t2[re(static_cast<int>(i))][re(static_cast<int>(j))] = re(table[i][j]);
        table = std::move(t2);
        if (!names.empty()) std::swap(names[0], names[static_cast<std::size_t>(e)]);
    }
    GroupTable g;
    g.n = n;
    g.table = std::move(table);
    g.names = std::move(names);
    g.name = std::move(group_name);
    g.inverse.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (g.table[i][j] == 0 && g.table[j][i] == 0) {
                g.inverse[i] = static_cast<int>(j);
                break;
            }
        if (g.inverse[i] < 0) {
            std::ostringstream os;
            os << "element " << i << " has no two-sided inverse";
            throw ValidationError(os.str());
        }
    }
    return g;
}

/// Parse the Cayley file format: line 1 is the order n, lines 2..n+1 are rows
/// of n whitespace-separated 0-based indices, optionally followed by a
/// `# names: ...` comment. Errors carry 1-based line numbers.
inline GroupTable parse_cayley(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line()) throw ParseError("line 1: expected group order");
    long n = 0;
    {
        std::istringstream ls(line);
        if (!(ls >> n) || n <= 0) throw ParseError("line " + std::to_string(lineno) + ": expected a positive group order");
        std::string junk;
        if (ls >> junk) throw ParseError("line " + std::to_string(lineno) + ": unexpected token after group order");
    }
    std::vector<std::vector<int>> table;
    table.reserve(static_cast<std::size_t>(n));
    for (long r = 0; r < n; ++r) {
        if (!next_line()) throw ParseError("line " + std::to_string(lineno + 1) + ": expected table row " + std::to_string(r + 1));
        std::istringstream ls(line);
        std::vector<int> row;
        long v;
        while (ls >> v) {
            if (v < 0 || v >= n)
                throw ParseError("line " + std::to_string(lineno) + ": index " + std::to_string(v) + " out of range");
            row.push_back(static_cast<int>(v));
        }
        if (!ls.eof()) throw ParseError("line " + std::to_string(lineno) + ": malformed table entry");
        if (row.size() != static_cast<std::size_t>(n))
            throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(n) + " entries, got " +
                             std::to_string(row.size()));
        table.push_back(std::move(row));
    }
    std::vector<std::string> names;
    while (next_line()) {
        std::string trimmed = line.substr(line.find_first_not_of(" \t"));
        if (trimmed.rfind("# names:", 0) == 0) {
            std::istringstream ls(trimmed.substr(8));
            std::string w;
            while (ls >> w) names.push_back(w);
            if (names.size() != static_cast<std::size_t>(n))
                throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(n) + " names");
        } else if (trimmed[0] == '#') {
            continue;
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unexpected content after table");
        }
    }
    return make_group(std::move(table), std::move(names));
}

using Permutation = std::vector<int>;

inline Permutation compose(const Permutation& p, const Permutation& q) {
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
}

inline std::string cycle_notation(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        out += '(';
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out += ' ';
            out += std::to_string(j);
            first = false;
            j = static_cast<std::size_t>(p[j]);
        }
        out += ')';
    }
    return out.empty() ? "e" : out;
}

/// Parse one-generator-per-line cycle notation, e.g. "(0 1 2)(3 4)".
/// Blank lines and '#' comments are skipped. All generators are padded to a
/// common domain size (the largest point seen plus one).
inline std::vector<Permutation> parse_cycles(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::vector<std::vector<int>>> gens_cycles;
    int max_point = -1;
    while (std::getline(in, line)) {
        ++lineno;
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::vector<std::vector<int>> cycles;
        std::size_t i = pos;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            if (line[i] != '(') throw ParseError("line " + std::to_string(lineno) + ": expected '('");
            const auto close = line.find(')', i);
            if (close == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": unbalanced '('");
            std::istringstream cs(line.substr(i + 1, close - i - 1));
            std::vector<int> cyc;
            long v;
            while (cs >> v) {
                if (v < 0) throw ParseError("line " + std::to_string(lineno) + ": negative point");
                cyc.push_back(static_cast<int>(v));
                max_point = std::max(max_point, static_cast<int>(v));
            }
            if (!cs.eof()) throw ParseError("line " + std::to_string(lineno) + ": malformed cycle");
            if (!cyc.empty()) cycles.push_back(std::move(cyc));
            i = close + 1;
        }
        gens_cycles.push_back(std::move(cycles));
    }
    if (gens_cycles.empty()) throw ParseError("no generators found");
    const std::size_t m = static_cast<std::size_t>(max_point + 1);
    std::vector<Permutation> gens;
    for (std::size_t gi = 0; gi < gens_cycles.size(); ++gi) {
        Permutation p(m);
        for (std::size_t k = 0; k < m; ++k) p[k] = static_cast<int>(k);
        std::vector<bool> used(m, false);
        for (const auto& cyc : gens_cycles[gi]) {
            for (std::size_t k = 0; k < cyc.size(); ++k) {
                const int a = cyc[k], b = cyc[(k + 1) % cyc.size()];
                if (used[static_cast<std::size_t>(a)])
                    throw ParseError("generator " + std::to_string(gi + 1) + ": point " + std::to_string(a) +
                                     " repeated across cycles");
                used[static_cast<std::size_t>(a)] = true;
                p[static_cast<std::size_t>(a)] = b;
            }
        }
        gens.push_back(std::move(p));
    }
    return gens;
}

/// A permutation group realized by breadth-first closure of its generators.
/// Elements are indexed in discovery order with the identity first; `words`
/// holds, per element, one generator word producing it.
struct PermClosure {
    GroupTable group;
    std::vector<Permutation> elements;
    std::vector<std::vector<int>> words;
};

inline PermClosure from_permutations(std::vector<Permutation> generators, std::size_t bound = 10000) {
    if (generators.empty()) throw ValidationError("no generators given");
    std::size_t m = 0;
    for (const auto& g : generators) m = std::max(m, g.size());
    for (auto& g : generators) {
        const std::size_t old = g.size();
        g.resize(m);
        for (std::size_t i = old; i < m; ++i) g[i] = static_cast<int>(i);
        std::vector<bool> hit(m, false);
        for (int v : g) {
            if (v < 0 || static_cast<std::size_t>(v) >= m || hit[static_cast<std::size_t>(v)])
                throw ValidationError("generator is not a permutation");
            hit[static_cast<std::size_t>(v)] = true;
        }
    }
    Permutation id(m);
    for (std::size_t i = 0; i < m; ++i) id[i] = static_cast<int>(i);

    std::vector<Permutation> elems{id};
    std::vector<std::vector<int>> words{{}};
    std::map<Permutation, int> index{{id, 0}};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (std::size_t gi = 0; gi < generators.size(); ++gi) {
            Permutation p = compose(elems[head], generators[gi]);
            if (index.count(p)) continue;
            if (elems.size() >= bound) throw ValidationError("closure exceeds bound of " + std::to_string(bound));
            index.emplace(p, static_cast<int>(elems.size()));
            std::vector<int> w = words[head];
            w.push_back(static_cast<int>(gi));
            elems.push_back(std::move(p));
            words.push_back(std::move(w));
        }
    }
    const std::size_t n = elems.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) {
        names[i] = cycle_notation(elems[i]);
        for (std::size_t j = 0; j < n; ++j) table[i][j] = index.at(compose(elems[i], elems[j]));
    }
    PermClosure out;
    out.group = make_group(std::move(table), std::move(names));
    out.elements = std::move(elems);
    out.words = std::move(words);
    return out;
}

inline std::vector<ConjugacyClass> conjugacy_classes(const GroupTable& g) {
    std::vector<bool> done(g.n, false);
    std::vector<ConjugacyClass> out;
    for (std::size_t a = 0; a < g.n; ++a) {
        if (done[a]) continue;
        std::set<int> members;
        for (std::size_t x = 0; x < g.n; ++x) members.insert(g.conj(static_cast<int>(x), static_cast<int>(a)));
        ConjugacyClass c;
        c.members.assign(members.begin(), members.end());
        c.representative = c.members.front();
        for (int mbr : c.members) done[static_cast<std::size_t>(mbr)] = true;
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(),
              [](const ConjugacyClass& x, const ConjugacyClass& y) { return x.representative < y.representative; });
    return out;
}

inline std::vector<int> centralizer(const GroupTable& g, int a) {
    if (a < 0 || static_cast<std::size_t>(a) >= g.n) throw std::out_of_range("centralizer: element index out of range");
    std::vector<int> z;
    for (std::size_t x = 0; x < g.n; ++x)
        if (g.op(a, static_cast<int>(x)) == g.op(static_cast<int>(x), a)) z.push_back(static_cast<int>(x));
    return z;
}

inline bool is_abelian(const GroupTable& g) {
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = i + 1; j < g.n; ++j)
            if (g.table[i][j] != g.table[j][i]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Irrep validation
// ---------------------------------------------------------------------------

inline double homomorphism_residual(const GroupTable& g, const Irrep& rho) {
    double worst = 0.0;
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = 0; j < g.n; ++j) {
            const CMatrix lhs = matmul(rho.matrices[i], rho.matrices[j]);
            worst = std::max(worst, (lhs - rho.matrices[static_cast<std::size_t>(g.op(static_cast<int>(i), static_cast<int>(j)))]).max_abs());
        }
    return worst;
}

/// Dimension of {M : M ρ(g) = ρ(g) M for all g}, via the nullspace of the
/// stacked linear system; 1 means irreducible.
inline std::size_t commutant_dimension(const std::vector<CMatrix>& mats, double tol = kDefaultTol) {
    if (mats.empty()) return 0;
    const std::size_t d = mats[0].rows();
    CMatrix sys(mats.size() * d * d, d * d);
    const CMatrix id = CMatrix::identity(d);
    for (std::size_t k = 0; k < mats.size(); ++k) {
        const CMatrix block = kron(mats[k], id) - kron(id, mats[k].transpose());
        for (std::size_t i = 0; i < d * d; ++i)
            for (std::size_t j = 0; j < d * d; ++j) sys(k * d * d + i, j) = block(i, j);
    }
    return nullspace(sys, tol).cols();
}

inline void validate_irrep(const GroupTable& g, const Irrep& rho, double tol = kDefaultTol) {
    if (rho.matrices.size() != g.n) throw ValidationError("irrep '" + rho.label + "': matrix count != group order");
    for (const CMatrix& m : rho.matrices)
        if (m.rows() != rho.degree || m.cols() != rho.degree)
            throw ValidationError("irrep '" + rho.label + "': dimension mismatch");
    if ((rho.matrices[0] - CMatrix::identity(rho.degree)).max_abs() > tol)
        throw ValidationError("irrep '" + rho.label + "': identity does not map to the unit matrix");
    const double hres = homomorphism_residual(g, rho);
    if (hres > tol) {
        std::ostringstream os;
        os << "irrep '" << rho.label << "': homomorphism residual " << hres << " exceeds tolerance";
        throw ValidationError(os.str());
    }
    const std::size_t cd = commutant_dimension(rho.matrices, tol);
    if (cd != 1)
        throw ValidationError("irrep '" + rho.label + "': commutant dimension " + std::to_string(cd) +
                              " (reducible or degenerate)");
}

// ---------------------------------------------------------------------------
// Irrep construction: abelian characters, abelianization pullbacks, and the
// standard representation of a permutation action.
// ---------------------------------------------------------------------------

/// All n characters of an abelian group, built inductively: extend the
/// character list of a subgroup H to <H, g> by choosing the m-th roots of
/// χ(g^m), m the least power with g^m ∈ H. Index 0 is the trivial character.
inline std::vector<Irrep> abelian_characters(const GroupTable& g) {
    if (!is_abelian(g)) throw ValidationError("abelian_characters: group is not abelian");
    const std::size_t n = g.n;
    std::vector<int> sub{0};
    std::vector<bool> in_sub(n, false);
    in_sub[0] = true;
    // chars[k][x] = value of character k on subgroup element x (0 elsewhere)
    std::vector<std::vector<cplx>> chars{std::vector<cplx>(n)};
    chars[0][0] = 1.0;
    while (sub.size() < n) {
        int gen = -1;
        for (std::size_t x = 0; x < n; ++x)
            if (!in_sub[x]) {
                gen = static_cast<int>(x);
                break;
            }
        std::size_t m = 1;
        int p = gen;
        while (!in_sub[static_cast<std::size_t>(p)]) {
            p = g.op(p, gen);
            ++m;
        }
        // p = gen^m ∈ H
        std::vector<std::vector<cplx>> next;
        next.reserve(chars.size() * m);
        for (const auto& chi : chars) {
            const double theta = std::arg(chi[static_cast<std::size_t>(p)]);
            for (std::size_t k = 0; k < m; ++k) {
                const cplx zeta = std::polar(1.0, (theta + 2.0 * std::numbers::pi * static_cast<double>(k)) / static_cast<double>(m));
                std::vector<cplx> ext(n);
                cplx zpow = 1.0;
                int gpow = 0; // gen^j
                for (std::size_t j = 0; j < m; ++j) {
                    for (int h : sub) ext[static_cast<std::size_t>(g.op(h, gpow))] = chi[static_cast<std::size_t>(h)] * zpow;
                    zpow *= zeta;
                    gpow = g.op(gpow, gen);
                }
                next.push_back(std::move(ext));
            }
        }
        std::vector<int> newsub;
        int gpow = 0;
        for (std::size_t j = 0; j < m; ++j) {
            for (int h : sub) newsub.push_back(g.op(h, gpow));
            gpow = g.op(gpow, gen);
        }
        sub = std::move(newsub);
        for (int h : sub) in_sub[static_cast<std::size_t>(h)] = true;
        chars = std::move(next);
    }
    std::vector<Irrep> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        Irrep r;
        r.degree = 1;
        r.label = "chi" + std::to_string(k);
        r.matrices.resize(n, CMatrix(1, 1));
        for (std::size_t x = 0; x < n; ++x) r.matrices[x](0, 0) = chars[k][x];
        out.push_back(std::move(r));
    }
    return out;
}

namespace detail {

/// Closure of a seed set under the group operation (subgroup generated).
inline std::vector<int> subgroup_closure(const GroupTable& g, std::vector<int> seed) {
    std::set<int> s(seed.begin(), seed.end());
    s.insert(0);
    std::vector<int> queue(s.begin(), s.end());
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (std::size_t k = 0; k < queue.size(); ++k) {
            for (int prod : {g.op(queue[head], queue[k]), g.op(queue[k], queue[head])})
                if (s.insert(prod).second) queue.push_back(prod);
        }
    std::vector<int> out(s.begin(), s.end());
    return out;
}

} // namespace detail

inline std::vector<int> commutator_subgroup(const GroupTable& g) {
    std::vector<int> seed;
    for (std::size_t a = 0; a < g.n; ++a)
        for (std::size_t b = 0; b < g.n; ++b) {
            const int ia = static_cast<int>(a), ib = static_cast<int>(b);
            seed.push_back(g.op(g.op(ia, ib), g.op(g.inv(ia), g.inv(ib))));
        }
    return detail::subgroup_closure(g, std::move(seed));
}

/// All degree-1 irreps of g: characters of G/[G,G] pulled back along the
/// quotient map. Index 0 is the trivial representation.
inline std::vector<Irrep> one_dim_irreps(const GroupTable& g) {
    const std::vector<int> comm = commutator_subgroup(g);
    // left cosets, ordered by smallest member; the coset of e comes first
    std::vector<int> coset_of(g.n, -1);
    std::vector<std::vector<int>> cosets;
    for (std::size_t x = 0; x < g.n; ++x) {
        if (coset_of[x] >= 0) continue;
        std::vector<int> c;
        for (int k : comm) c.push_back(g.op(static_cast<int>(x), k));
        std::sort(c.begin(), c.end());
        for (int y : c) coset_of[static_cast<std::size_t>(y)] = static_cast<int>(cosets.size());
        cosets.push_back(std::move(c));
    }
    const std::size_t q = cosets.size();
    // the coset of e is discovered first (x = 0), so the quotient identity is
    // already index 0 and make_group will not relabel
    std::vector<std::vector<int>> qtable(q, std::vector<int>(q));
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j)
            qtable[i][j] = coset_of[static_cast<std::size_t>(g.op(cosets[i][0], cosets[j][0]))];
    const GroupTable quotient = make_group(std::move(qtable));
    std::vector<Irrep> qchars = abelian_characters(quotient);
    std::vector<Irrep> out;
    out.reserve(q);
    for (std::size_t k = 0; k < qchars.size(); ++k) {
        Irrep r;
        r.degree = 1;
        r.label = "chi" + std::to_string(k);
        r.matrices.resize(g.n, CMatrix(1, 1));
        for (std::size_t x = 0; x < g.n; ++x)
            r.matrices[x](0, 0) = qchars[k].matrices[static_cast<std::size_t>(coset_of[x])](0, 0);
        out.push_back(std::move(r));
    }
    return out;
}

/// Standard representation of a permutation action on m points: the action on
/// the sum-zero subspace in the basis f_i = e_i − e_{m−1}, i < m−1. Integer
/// matrices; irreducible for 2-transitive actions.
inline Irrep standard_rep(const std::vector<Permutation>& elements, std::string label = "std") {
    const std::size_t m = elements.at(0).size();
    Irrep r;
    r.degree = m - 1;
    r.label = std::move(label);
    for (const Permutation& p : elements) {
        CMatrix mat(m - 1, m - 1);
        const int last = p[m - 1];
        for (std::size_t i = 0; i + 1 < m; ++i) {
            const int pi = p[i];
            if (pi != static_cast<int>(m - 1)) mat(static_cast<std::size_t>(pi), i) += 1.0;
            if (last != static_cast<int>(m - 1)) mat(static_cast<std::size_t>(last), i) -= 1.0;
        }
        r.matrices.push_back(std::move(mat));
    }
    return r;
}

/// Build an irrep from generator matrices using the word decompositions of a
/// permutation closure. Well-definedness is certified by validate_irrep.
inline Irrep rep_from_generator_matrices(const PermClosure& pc, const std::vector<CMatrix>& gen_mats,
                                         std::string label) {
    Irrep r;
    r.degree = gen_mats.at(0).rows();
    r.label = std::move(label);
    for (const auto& word : pc.words) {
        CMatrix m = CMatrix::identity(r.degree);
        for (int gi : word) m = matmul(m, gen_mats[static_cast<std::size_t>(gi)]);
        r.matrices.push_back(std::move(m));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

struct GroupData {
    GroupTable group;
    std::vector<Irrep> irreps; // complete inequivalent list
};

namespace detail {

inline GroupData catalog_cyclic(std::size_t n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) {
        names[i] = i == 0 ? "e" : (i == 1 ? "x" : "x^" + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<int>((i + j) % n);
    }
    GroupData d;
    d.group = make_group(std::move(t), std::move(names), "Z" + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
        Irrep r;
        r.degree = 1;
        r.label = "chi" + std::to_string(j);
        r.matrices.resize(n, CMatrix(1, 1));
        for (std::size_t k = 0; k < n; ++k)
            r.matrices[k](0, 0) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(n));
        d.irreps.push_back(std::move(r));
    }
    return d;
}

inline GroupData catalog_s3() {
    PermClosure pc = from_permutations({{1, 0, 2}, {1, 2, 0}}); // (0 1), (0 1 2)
    GroupData d;
    d.group = pc.group;
    d.group.name = "S3";
    std::vector<Irrep> ones = one_dim_irreps(d.group);
    ones[0].label = "trivial";
    ones[1].label = "sign";
    d.irreps = std::move(ones);
    d.irreps.push_back(standard_rep(pc.elements));
    return d;
}

inline GroupData catalog_a4() {
    PermClosure pc = from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}); // (0 1 2), (0 1)(2 3)
    GroupData d;
    d.group = pc.group;
    d.group.name = "A4";
    std::vector<Irrep> ones = one_dim_irreps(d.group);
    ones[0].label = "trivial";
    ones[1].label = "omega";
    ones[2].label = "omega2";
    d.irreps = std::move(ones);
    d.irreps.push_back(standard_rep(pc.elements));
    return d;
}

inline GroupData catalog_d4() {
    PermClosure pc = from_permutations({{1, 2, 3, 0}, {2, 1, 0, 3}}); // (0 1 2 3), (0 2)
    GroupData d;
    d.group = pc.group;
    d.group.name = "D4";
    std::vector<Irrep> ones = one_dim_irreps(d.group);
    ones[0].label = "trivial";
    d.irreps = std::move(ones);
    CMatrix rot(2, 2), refl(2, 2);
    rot(0, 1) = -1.0;
    rot(1, 0) = 1.0;
    refl(0, 0) = 1.0;
    refl(1, 1) = -1.0;
    d.irreps.push_back(rep_from_generator_matrices(pc, {rot, refl}, "std"));
    return d;
}

inline GroupData catalog_q8() {
    // elements: 1,-1,i,-i,j,-j,k,-k encoded as (axis 0..3, sign)
    auto enc = [](int axis, int sign) { return 2 * axis + (sign < 0 ? 1 : 0); };
    auto axis_of = [](int x) { return x / 2; };
    auto sign_of = [](int x) { return x % 2 == 0 ? 1 : -1; };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            const int a = axis_of(x), b = axis_of(y);
            int s = sign_of(x) * sign_of(y), c;
            if (a == 0)
                c = b;
            else if (b == 0)
                c = a;
            else if (a == b) {
                c = 0;
                s = -s;
            } else {
                c = 6 - a - b; // the third imaginary axis
                if (b != (a % 3) + 1) s = -s;
            }
            t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = enc(c, s);
        }
    GroupData d;
    d.group = make_group(std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, "Q8");
    std::vector<Irrep> ones = one_dim_irreps(d.group);
    ones[0].label = "trivial";
    d.irreps = std::move(ones);
    Irrep two;
    two.degree = 2;
    two.label = "std";
    const cplx I(0.0, 1.0);
    std::vector<CMatrix> axis_mats(4, CMatrix(2, 2));
    axis_mats[0](0, 0) = 1.0;
    axis_mats[0](1, 1) = 1.0;
    axis_mats[1](0, 0) = I;
    axis_mats[1](1, 1) = -I;
    axis_mats[2](0, 1) = 1.0;
    axis_mats[2](1, 0) = -1.0;
    axis_mats[3](0, 1) = I;
    axis_mats[3](1, 0) = I;
    for (int x = 0; x < 8; ++x)
        two.matrices.push_back(axis_mats[static_cast<std::size_t>(axis_of(x))] * cplx(sign_of(x), 0.0));
    d.irreps.push_back(std::move(two));
    return d;
}

} // namespace detail

/// Catalog groups with bundled complete irrep lists:
/// "Z<n>", "S3", "D4", "Q8", "A4". Throws ParseError on unknown names.
inline GroupData catalog(const std::string& name) {
    GroupData d;
    if (name.size() > 1 && name[0] == 'Z') {
        long n = 0;
        std::istringstream is(name.substr(1));
        if ((is >> n) && is.eof() && n > 0)
            d = detail::catalog_cyclic(static_cast<std::size_t>(n));
        else
            throw ParseError("unknown catalog group '" + name + "'");
    } else if (name == "S3")
        d = detail::catalog_s3();
    else if (name == "D4")
        d = detail::catalog_d4();
    else if (name == "Q8")
        d = detail::catalog_q8();
    else if (name == "A4")
        d = detail::catalog_a4();
    else
        throw ParseError("unknown catalog group '" + name + "'");
    for (const Irrep& r : d.irreps) validate_irrep(d.group, r);
    return d;
}

} // namespace bicov
