#include "enriched/linalg.hpp"

#include <algorithm>

namespace enriched {

Fq::Fq(unsigned q_) : q(q_) {
    if (q < 2) throw std::invalid_argument("field order must be at least 2");
    for (unsigned d = 2; d * d <= q; ++d)
        if (q % d == 0) throw std::invalid_argument("field order must be prime");
}

unsigned Fq::pow(unsigned a, unsigned long long e) const {
    unsigned long long base = a % q, acc = 1;
    while (e) {
        if (e & 1) acc = acc * base % q;
        base = base * base % q;
        e >>= 1;
    }
    return static_cast<unsigned>(acc);
}

unsigned Fq::inv(unsigned a) const {
    if (a % q == 0) throw std::invalid_argument("zero has no inverse");
    return pow(a, q - 2);
}

namespace {

// In-place reduction to reduced row echelon form; drops zero rows.
void rref(const Fq& f, std::vector<FVec>& rows, unsigned ambient) {
    std::size_t r = 0;
    for (unsigned col = 0; col < ambient && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        unsigned s = f.inv(rows[r][col]);
        for (unsigned j = 0; j < ambient; ++j) rows[r][j] = f.mul(rows[r][j], s);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            unsigned c = rows[i][col];
            for (unsigned j = 0; j < ambient; ++j)
                rows[i][j] = f.sub(rows[i][j], f.mul(c, rows[r][j]));
        }
        ++r;
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const FVec& v) {
                                  return std::all_of(v.begin(), v.end(),
                                                     [](unsigned x) { return x == 0; });
                              }),
               rows.end());
    std::sort(rows.begin(), rows.end(), [](const FVec& a, const FVec& b) {
        auto lead = [](const FVec& v) {
            for (std::size_t i = 0; i < v.size(); ++i)
                if (v[i]) return i;
            return v.size();
        };
        return lead(a) < lead(b);
    });
}

}  // namespace

Subspace::Subspace(unsigned q, unsigned ambient) : q_(q), ambient_(ambient) {
    Fq f(q);  // validates q
}

Subspace Subspace::span(unsigned q, unsigned ambient, const std::vector<FVec>& gens) {
    Fq f(q);
    Subspace s(q, ambient);
    std::vector<FVec> rows;
    for (const FVec& g : gens) {
        if (g.size() != ambient)
            throw std::invalid_argument("generator has wrong length");
        FVec r(ambient);
        for (unsigned j = 0; j < ambient; ++j) r[j] = g[j] % q;
        rows.push_back(std::move(r));
    }
    rref(f, rows, ambient);
    s.rows_ = std::move(rows);
    return s;
}

bool Subspace::contains(const FVec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector has wrong length");
    Fq f(q_);
    FVec w(ambient_);
    for (unsigned j = 0; j < ambient_; ++j) w[j] = v[j] % q_;
    for (const FVec& row : rows_) {
        unsigned lead = 0;
        while (lead < ambient_ && row[lead] == 0) ++lead;
        if (lead == ambient_ || w[lead] == 0) continue;
        unsigned c = w[lead];
        for (unsigned j = 0; j < ambient_; ++j) w[j] = f.sub(w[j], f.mul(c, row[j]));
    }
    return std::all_of(w.begin(), w.end(), [](unsigned x) { return x == 0; });
}

Subspace Subspace::sum(const Subspace& other) const {
    if (q_ != other.q_ || ambient_ != other.ambient_)
        throw std::invalid_argument("subspace mismatch");
    std::vector<FVec> gens = rows_;
    gens.insert(gens.end(), other.rows_.begin(), other.rows_.end());
    return span(q_, ambient_, gens);
}

Subspace hyperplane_kernel(const Fq& f, const FVec& coeffs) {
    unsigned n = static_cast<unsigned>(coeffs.size());
    unsigned lead = 0;
    while (lead < n && coeffs[lead] % f.q == 0) ++lead;
    if (lead == n) throw std::invalid_argument("zero functional has no hyperplane kernel");
    std::vector<FVec> gens;
    unsigned a = coeffs[lead] % f.q;
    for (unsigned j = 0; j < n; ++j) {
        if (j == lead) continue;
        FVec v(n, 0);
        v[j] = a;
        v[lead] = f.neg(coeffs[j] % f.q);
        gens.push_back(std::move(v));
    }
    return Subspace::span(f.q, n, gens);
}

Subspace subspace_sum(const Fq& f, unsigned ambient,
                      const std::vector<Subspace>& parts,
                      const std::vector<std::vector<unsigned>>& inclusions) {
    if (parts.size() != inclusions.size())
        throw std::invalid_argument("one inclusion required per part");
    std::vector<FVec> gens;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& inc = inclusions[i];
        if (inc.size() != parts[i].ambient())
            throw std::invalid_argument("inclusion length mismatch");
        for (unsigned pos : inc)
            if (pos >= ambient) throw std::invalid_argument("inclusion target out of range");
        for (const FVec& row : parts[i].basis()) {
            FVec v(ambient, 0);
            for (unsigned j = 0; j < inc.size(); ++j) v[inc[j]] = row[j];
            gens.push_back(std::move(v));
        }
    }
    return Subspace::span(f.q, ambient, gens);
}

FVec normalize_proj(const Fq& f, FVec v) {
    unsigned lead = 0;
    while (lead < v.size() && v[lead] % f.q == 0) ++lead;
    if (lead == v.size())
        throw std::invalid_argument("zero vector is not a projective point");
    unsigned s = f.inv(v[lead]);
    for (auto& x : v) x = f.mul(x % f.q, s);
    return v;
}

std::vector<FVec> enumerate_proj(const Fq& f, unsigned n) {
    std::vector<FVec> out;
    for (unsigned lead = 0; lead < n; ++lead) {
        FVec v(n, 0);
        v[lead] = 1;
        unsigned free = n - lead - 1;
        unsigned long long total = 1;
        for (unsigned i = 0; i < free; ++i) total *= f.q;
        for (unsigned long long code = 0; code < total; ++code) {
            unsigned long long c = code;
            for (unsigned i = 0; i < free; ++i) {
                v[lead + 1 + i] = static_cast<unsigned>(c % f.q);
                c /= f.q;
            }
            out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace enriched
