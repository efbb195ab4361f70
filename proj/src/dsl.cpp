#include "sacat/dsl.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace sacat {

namespace {

using Perm = std::vector<uint32_t>;

Perm compose(const Perm& a, const Perm& b) {
    // (a*b)(i) = a(b(i)); matches table[a][b] = a*b with left action.
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[b[i]];
    return r;
}

Group group_from_perms(std::vector<Perm> elements, const std::string& label) {
    const auto n = static_cast<uint32_t>(elements.size());
    std::map<Perm, uint32_t> index;
    for (uint32_t i = 0; i < n; ++i)
        index[elements[i]] = i;
    std::vector<uint32_t> flat(static_cast<size_t>(n) * n);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j)
            flat[i * n + j] = index.at(compose(elements[i], elements[j]));
    return FiniteGroup::from_table_unchecked(std::move(flat), n, label);
}

} // namespace

Group cyclic_group(uint32_t n) {
    check(n >= 1, errc::unsupported_name, "C0");
    std::vector<uint32_t> flat(static_cast<size_t>(n) * n);
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b)
            flat[a * n + b] = (a + b) % n;
    return FiniteGroup::from_table_unchecked(std::move(flat), n, "C" + std::to_string(n));
}

Group dihedral_group(uint32_t n) {
    check(n >= 1, errc::unsupported_name, "D0");
    // Elements r^i s^j with index i + n*j; s r s = r^-1.
    const uint32_t ord = 2 * n;
    auto idx = [n](uint32_t i, uint32_t j) { return i + n * j; };
    std::vector<uint32_t> flat(static_cast<size_t>(ord) * ord);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < 2; ++j)
            for (uint32_t k = 0; k < n; ++k)
                for (uint32_t l = 0; l < 2; ++l) {
                    // (r^i s^j)(r^k s^l) = r^{i + k*(-1)^j} s^{j+l}
                    const uint32_t rexp = j == 0 ? (i + k) % n : (i + n - k % n) % n;
                    flat[idx(i, j) * ord + idx(k, l)] = idx(rexp, (j + l) % 2);
                }
    return FiniteGroup::from_table_unchecked(std::move(flat), ord, "D" + std::to_string(n));
}

Group quaternion_group() {
    // {1,-1,i,-i,j,-j,k,-k} realized as r^a s^b, r = i (order 4), s = j,
    // s^2 = r^2, s^-1 r s = r^-1. Index a + 4*b, a in 0..3, b in 0..1.
    const uint32_t ord = 8;
    auto idx = [](uint32_t a, uint32_t b) { return a + 4 * b; };
    std::vector<uint32_t> flat(ord * ord);
    for (uint32_t a = 0; a < 4; ++a)
        for (uint32_t b = 0; b < 2; ++b)
            for (uint32_t c = 0; c < 4; ++c)
                for (uint32_t d = 0; d < 2; ++d) {
                    // (r^a s^b)(r^c s^d): move s^b past r^c: s r = r^-1 s.
                    uint32_t rexp = (a + (b == 0 ? c : 4 - c)) % 4;
                    uint32_t sexp = b + d;
                    if (sexp >= 2) { // s^2 = r^2
                        sexp -= 2;
                        rexp = (rexp + 2) % 4;
                    }
                    flat[idx(a, b) * ord + idx(c, d)] = idx(rexp, sexp);
                }
    return FiniteGroup::from_table_unchecked(std::move(flat), ord, "Q8");
}

Group symmetric_group(uint32_t n) {
    check(n >= 1 && n <= 6, errc::unsupported_name, "S" + std::to_string(n) + " (n <= 6)");
    Perm id(n);
    std::iota(id.begin(), id.end(), 0u);
    std::vector<Perm> elems;
    Perm p = id;
    do {
        elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    // Lexicographic order puts the identity first.
    return group_from_perms(std::move(elems), "S" + std::to_string(n));
}

Group alternating_group(uint32_t n) {
    check(n >= 1 && n <= 6, errc::unsupported_name, "A" + std::to_string(n) + " (n <= 6)");
    Perm id(n);
    std::iota(id.begin(), id.end(), 0u);
    std::vector<Perm> elems;
    Perm p = id;
    do {
        uint32_t inversions = 0;
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = i + 1; j < p.size(); ++j)
                if (p[i] > p[j])
                    ++inversions;
        if (inversions % 2 == 0)
            elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return group_from_perms(std::move(elems), "A" + std::to_string(n));
}

Group permutation_closure(const std::vector<std::vector<uint32_t>>& gens, const std::string& label,
                          uint32_t cap) {
    check(!gens.empty(), errc::parse_error, "no permutation generators");
    const size_t deg = gens[0].size();
    for (const auto& g : gens) {
        check(g.size() == deg, errc::parse_error, "generator degrees differ");
        std::vector<char> seen(deg, 0);
        for (auto v : g) {
            check(v < deg && !seen[v], errc::parse_error, "not a permutation");
            seen[v] = 1;
        }
    }
    Perm id(deg);
    std::iota(id.begin(), id.end(), 0u);
    std::vector<Perm> elems{id};
    std::map<Perm, uint32_t> index{{id, 0}};
    for (size_t i = 0; i < elems.size(); ++i)
        for (const auto& g : gens) {
            Perm p = compose(elems[i], g);
            if (!index.count(p)) {
                check(elems.size() < cap, errc::closure_too_large,
                      "closure exceeds cap " + std::to_string(cap));
                index[p] = static_cast<uint32_t>(elems.size());
                elems.push_back(std::move(p));
            }
        }
    return group_from_perms(std::move(elems), label);
}

namespace {

std::vector<Perm> parse_perm_generators(const std::string& body) {
    // Comma-separated permutations, each a product of cycles "(0 1 2)(3 4)".
    std::vector<std::vector<std::vector<uint32_t>>> gen_cycles;
    std::vector<std::vector<uint32_t>> cycles;
    std::vector<uint32_t> cycle;
    uint32_t max_point = 0;
    size_t i = 0;
    bool in_cycle = false;
    auto flush_gen = [&] {
        check(!in_cycle, errc::parse_error, "unterminated cycle");
        check(!cycles.empty(), errc::parse_error, "empty permutation");
        gen_cycles.push_back(cycles);
        cycles.clear();
    };
    while (i < body.size()) {
        const char c = body[i];
        if (c == ' ') {
            ++i;
        } else if (c == '(') {
            check(!in_cycle, errc::parse_error, "nested cycle at position " + std::to_string(i));
            in_cycle = true;
            cycle.clear();
            ++i;
        } else if (c == ')') {
            check(in_cycle, errc::parse_error, "stray ')' at position " + std::to_string(i));
            in_cycle = false;
            cycles.push_back(cycle);
            ++i;
        } else if (c == ',') {
            check(!in_cycle, errc::parse_error, "',' inside cycle");
            flush_gen();
            ++i;
        } else if (c >= '0' && c <= '9') {
            check(in_cycle, errc::parse_error, "digit outside cycle");
            uint32_t v = 0;
            while (i < body.size() && body[i] >= '0' && body[i] <= '9')
                v = v * 10 + static_cast<uint32_t>(body[i++] - '0');
            check(v < 10000, errc::parse_error, "point too large");
            cycle.push_back(v);
            max_point = std::max(max_point, v);
        } else {
            fail(errc::parse_error, std::string("unexpected character '") + c + "'");
        }
    }
    flush_gen();

    const uint32_t deg = max_point + 1;
    std::vector<Perm> gens;
    for (const auto& gc : gen_cycles) {
        Perm p(deg);
        std::iota(p.begin(), p.end(), 0u);
        for (const auto& cyc : gc) {
            check(!cyc.empty(), errc::parse_error, "empty cycle");
            for (size_t k = 0; k < cyc.size(); ++k) {
                const uint32_t from = cyc[k], to = cyc[(k + 1) % cyc.size()];
                check(p[from] == from || cyc.size() == 1, errc::parse_error,
                      "point repeated within a permutation: " + std::to_string(from));
                p[from] = to;
            }
        }
        std::vector<char> seen(deg, 0);
        for (auto v : p) {
            check(!seen[v], errc::parse_error, "cycles overlap");
            seen[v] = 1;
        }
        gens.push_back(std::move(p));
    }
    return gens;
}

Group parse_atom(const std::string& atom) {
    check(!atom.empty(), errc::parse_error, "empty group name");
    const char head = atom[0];
    if (atom == "Q8")
        return quaternion_group();
    if (head == 'C' || head == 'D' || head == 'S' || head == 'A') {
        const std::string digits = atom.substr(1);
        check(!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos,
              errc::unsupported_name, atom);
        const auto n = static_cast<uint32_t>(std::stoul(digits));
        check(n >= 1 && n <= 100000, errc::unsupported_name, atom);
        switch (head) {
        case 'C': return cyclic_group(n);
        case 'D': return dihedral_group(n);
        case 'S': return symmetric_group(n);
        case 'A': return alternating_group(n);
        }
    }
    fail(errc::unsupported_name, atom);
}

} // namespace

Group builtin(const std::string& spec) {
    check(!spec.empty(), errc::parse_error, "empty spec");
    if (spec.rfind("perm:", 0) == 0) {
        auto gens = parse_perm_generators(spec.substr(5));
        return permutation_closure(gens, spec);
    }
    // Split on 'x' into product factors.
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        const size_t pos = spec.find('x', start);
        if (pos == std::string::npos) {
            parts.push_back(spec.substr(start));
            break;
        }
        parts.push_back(spec.substr(start, pos - start));
        start = pos + 1;
    }
    Group g = parse_atom(parts[0]);
    for (size_t i = 1; i < parts.size(); ++i)
        g = direct_product(g, parse_atom(parts[i]));
    return g;
}

} // namespace sacat
