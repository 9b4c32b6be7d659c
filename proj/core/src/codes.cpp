// SPDX-License-Identifier: Apache-2.0

#include "skewlcd/codes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "skewlcd/parallel.hpp"

namespace skewlcd {

LinearCode LinearCode::from_rows(const Matrix& rows) {
    LinearCode c;
    c.gen_ = rows.rref();
    return c;
}

LinearCode LinearCode::full_space(const FieldPtr& field, uint32_t n) {
    LinearCode c;
    c.gen_ = Matrix::identity(field, n);
    return c;
}

LinearCode LinearCode::zero_code(const FieldPtr& field, uint32_t n) {
    LinearCode c;
    c.gen_ = Matrix(field, 0, n);
    return c;
}

const Matrix& LinearCode::parity_check() const {
    if (!parity_) parity_ = gen_.null_space();
    return *parity_;
}

LinearCode LinearCode::dual(Inner inner) const {
    if (inner == Inner::hermitian && field()->extension_degree() % 2 != 0)
        throw std::invalid_argument("hermitian dual requires even extension degree");
    LinearCode out;
    out.gen_ = (inner == Inner::euclidean) ? parity_check() : gen_.conjugate().null_space();
    return out;
}

uint32_t LinearCode::hull_dim(Inner inner) const {
    const LinearCode d = dual(inner);
    if (dimension() == 0 || d.dimension() == 0) return 0;
    // dim(A ∩ B) = dim A + dim B - dim(A + B)
    const size_t sum_rank = gen_.vstack(d.gen_).rank();
    return static_cast<uint32_t>(dimension() + d.dimension() - sum_rank);
}

bool LinearCode::is_lcd_matrix(Inner inner) const {
    if (inner == Inner::hermitian && field()->extension_degree() % 2 != 0)
        throw std::invalid_argument("hermitian test requires even extension degree");
    if (dimension() == 0) return true;  // zero code: trivially trivial hull
    const Matrix other = (inner == Inner::euclidean) ? gen_ : gen_.conjugate();
    return (gen_ * other.transpose()).is_nonsingular();
}

bool LinearCode::contains(const std::vector<FieldElement>& word) const {
    if (word.size() != gen_.cols()) throw std::invalid_argument("word length mismatch");
    const Matrix& h = parity_check();
    for (size_t i = 0; i < h.rows(); ++i) {
        FieldElement s = field()->zero();
        for (size_t j = 0; j < h.cols(); ++j) s += h.at(i, j) * word[j];
        if (!s.is_zero()) return false;
    }
    return true;
}

std::string DistanceResult::str() const {
    std::ostringstream os;
    if (exact)
        os << "d=" << value;
    else
        os << "d>=" << value;
    return os.str();
}

namespace {

uint64_t binomial(uint32_t n, uint32_t k) {
    if (k > n) return 0;
    uint64_t r = 1;
    for (uint32_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// idx-th w-subset of {0..n-1} in lexicographic order
std::vector<uint32_t> unrank_support(uint64_t idx, uint32_t n, uint32_t w) {
    std::vector<uint32_t> supp;
    supp.reserve(w);
    uint32_t next = 0;
    for (uint32_t slot = 0; slot < w; ++slot) {
        for (uint32_t c = next; c < n; ++c) {
            const uint64_t block = binomial(n - c - 1, w - slot - 1);
            if (idx < block) {
                supp.push_back(c);
                next = c + 1;
                break;
            }
            idx -= block;
        }
    }
    return supp;
}

}  // namespace

DistanceResult min_distance_bounded(const LinearCode& code, uint32_t w_max, unsigned threads) {
    if (code.dimension() == 0) throw std::invalid_argument("minimum distance of the zero code");
    const auto& field = code.field();
    const uint32_t n = code.length();
    const uint64_t units = field->size() - 1;
    const Matrix& h = code.parity_check();
    if (h.rows() == 0) {
        // full space: weight-1 words are codewords
        DistanceResult res;
        res.value = 1;
        res.exact = true;
        res.witness.assign(n, field->zero());
        res.witness[0] = field->one();
        return res;
    }
    for (uint32_t w = 1; w <= w_max && w <= n; ++w) {
        uint64_t combos = 1;
        for (uint32_t i = 0; i < w; ++i) combos *= units;
        const uint64_t space = binomial(n, w) * combos;
        // candidate index -> (support, unit values); chunks scan disjoint
        // index ranges and report the smallest hit, so the witness is the
        // lexicographically first codeword regardless of the worker count
        auto hits = parallel_chunks(space, threads, [&](uint64_t lo, uint64_t hi) {
            std::optional<uint64_t> first;
            std::vector<FieldElement> word(n, field->zero());
            for (uint64_t idx = lo; idx < hi; ++idx) {
                const auto supp = unrank_support(idx / combos, n, w);
                uint64_t v = idx % combos;
                std::fill(word.begin(), word.end(), field->zero());
                for (uint32_t i = 0; i < w; ++i) {
                    word[supp[i]] = field->from_index(1 + v % units);
                    v /= units;
                }
                if (code.contains(word)) {
                    first = idx;
                    break;
                }
            }
            return first;
        });
        for (const auto& hit : hits) {
            if (!hit) continue;
            const auto supp = unrank_support(*hit / combos, n, w);
            uint64_t v = *hit % combos;
            DistanceResult res;
            res.value = w;
            res.exact = true;
            res.witness.assign(n, field->zero());
            for (uint32_t i = 0; i < w; ++i) {
                res.witness[supp[i]] = field->from_index(1 + v % units);
                v /= units;
            }
            return res;
        }
    }
    DistanceResult res;
    res.value = w_max + 1;
    res.exact = false;
    return res;
}

Matrix SkewConstaCode::shift_rows() const {
    const auto& field = gen_.field();
    const uint32_t n = modulus_.n;
    const uint32_t k = n - static_cast<uint32_t>(gen_.degree());
    Matrix rows(field, k, n);
    for (uint32_t i = 0; i < k; ++i) {
        const SkewPoly xi_g = SkewPoly::monomial(field->one(), i, gen_.r()) * gen_;
        for (uint32_t j = 0; j < n; ++j) rows.at(i, j) = xi_g.coeff(j);
    }
    return rows;
}

SkewConstaCode from_generator_poly(const ConstaModulus& M, const SkewPoly& g) {
    if (g.is_zero() || !g.is_monic()) throw std::invalid_argument("generator must be monic");
    SkewConstaCode out;
    out.modulus_ = M;
    out.gen_ = g;
    out.cofactor_ = cofactor(g, M);  // throws when g is not a right divisor
    if (g.degree() == static_cast<int64_t>(M.n)) {
        out.code_ = LinearCode::zero_code(M.field(), M.n);
        return out;
    }
    out.code_ = LinearCode::from_rows(out.shift_rows());
    return out;
}

std::vector<FieldElement> twisted_shift(const ConstaModulus& M, const std::vector<FieldElement>& c) {
    if (c.size() != M.n) throw std::invalid_argument("word length mismatch");
    const uint32_t r = M.r();
    std::vector<FieldElement> out;
    out.reserve(c.size());
    out.push_back(M.lambda * c.back().frobenius(r));
    for (size_t i = 0; i + 1 < c.size(); ++i) out.push_back(c[i].frobenius(r));
    return out;
}

bool is_skew_lcd(const SkewConstaCode& code, Inner inner) {
    const auto& M = code.modulus();
    const auto& field = M.field();
    if (M.lambda * M.lambda != field->one())
        throw std::invalid_argument("gcrd LCD criterion requires lambda^2 = 1");
    const uint32_t order = code.generator().theta_order();
    if (M.n % order != 0)
        throw std::invalid_argument("gcrd LCD criterion requires the length to be a multiple of the automorphism order");
    SkewPoly hnat = skew_reciprocal(code.cofactor_poly());
    if (inner == Inner::hermitian) hnat = conjugate(hnat);
    const bool by_gcrd = gcrd(code.generator(), hnat).degree() == 0;
    const bool by_matrix = code.code().is_lcd_matrix(inner);
    if (by_gcrd != by_matrix)
        throw std::logic_error("gcrd LCD criterion disagrees with the matrix criterion");
    return by_gcrd;
}

namespace {

uint64_t bracket_mod(const Field& field, uint32_t r, uint32_t i) {
    // [i] = (p^{ri}-1)/(p^r-1) reduced mod q-1 via [i+1] = p^r [i] + 1
    const uint64_t mod = field.size() - 1;
    uint64_t pr = 1;
    for (uint32_t j = 0; j < r; ++j) pr = pr * field.characteristic() % mod;
    uint64_t acc = 0;
    for (uint32_t j = 0; j < i; ++j) acc = (acc * pr + 1) % mod;
    return acc;
}

}  // namespace

std::vector<FieldElement> lambda_roots(const FieldPtr& field, uint32_t r, uint32_t n,
                                       const FieldElement& lambda) {
    if (lambda.is_zero()) throw std::invalid_argument("lambda must be a unit");
    const uint64_t e = bracket_mod(*field, r, n);
    std::vector<FieldElement> out;
    for (uint64_t idx = 1; idx < field->size(); ++idx) {
        const FieldElement d = field->from_index(idx);
        if (d.pow(static_cast<int64_t>(e)) == lambda) out.push_back(d);
    }
    return out;
}

ScaleMap ScaleMap::create(const FieldElement& delta, uint32_t r, uint32_t n) {
    if (delta.is_zero()) throw std::invalid_argument("scaling unit must be nonzero");
    ScaleMap m;
    m.delta = delta;
    m.exponents.reserve(n);
    for (uint32_t i = 0; i < n; ++i) m.exponents.push_back(bracket_mod(*delta.field(), r, i));
    return m;
}

std::vector<FieldElement> ScaleMap::apply(const std::vector<FieldElement>& word) const {
    if (word.size() != exponents.size()) throw std::invalid_argument("word length mismatch");
    std::vector<FieldElement> out;
    out.reserve(word.size());
    for (size_t i = 0; i < word.size(); ++i)
        out.push_back(delta.pow(-static_cast<int64_t>(exponents[i])) * word[i]);
    return out;
}

SkewConstaCode scale_equivalence(const SkewConstaCode& code, const FieldElement& delta) {
    const auto& M = code.modulus();
    const auto& field = M.field();
    if (delta.is_zero()) throw std::invalid_argument("scaling unit must be nonzero");
    if (M.lambda != field->one())
        throw std::invalid_argument("scale equivalence starts from a skew cyclic code (lambda = 1)");
    const uint32_t r = M.r();
    const uint32_t n = M.n;
    const ScaleMap map = ScaleMap::create(delta, r, n);
    const FieldElement target = delta.pow(static_cast<int64_t>(bracket_mod(*field, r, n)));

    const auto& g = code.generator();
    std::vector<FieldElement> cs;
    cs.reserve(g.coeffs().size());
    for (size_t i = 0; i < g.coeffs().size(); ++i)
        cs.push_back(g.coeff(i) * delta.pow(-static_cast<int64_t>(bracket_mod(*field, r, static_cast<uint32_t>(i)))));
    const SkewPoly image_gen = SkewPoly(field, r, std::move(cs)).monic();

    const ConstaModulus target_mod = ConstaModulus::create(field, r, n, target);
    return from_generator_poly(target_mod, image_gen);
}

}  // namespace skewlcd
