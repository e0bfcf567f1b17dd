#include "sympl/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sympl {

WeylElement WeylElement::identity_perm(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return from_perm(std::move(p));
}

WeylElement WeylElement::from_perm(std::vector<int> perm, std::vector<int> word) {
    WeylElement w;
    w.perm_ = std::move(perm);
    w.word_ = std::move(word);
    return w;
}

WeylElement WeylElement::identity_matrix(int r) {
    std::vector<std::vector<long long>> m(r, std::vector<long long>(r, 0));
    for (int i = 0; i < r; ++i) m[i][i] = 1;
    return from_matrix(std::move(m), {});
}

WeylElement WeylElement::from_matrix(std::vector<std::vector<long long>> mat, std::vector<int> word) {
    WeylElement w;
    w.mat_ = std::move(mat);
    w.word_ = std::move(word);
    return w;
}

bool WeylElement::is_identity() const {
    if (is_permutation()) {
        for (std::size_t i = 0; i < perm_.size(); ++i)
            if (perm_[i] != static_cast<int>(i)) return false;
        return true;
    }
    for (std::size_t i = 0; i < mat_.size(); ++i)
        for (std::size_t j = 0; j < mat_.size(); ++j)
            if (mat_[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

Weight WeylElement::apply(const Weight& zeta) const {
    if (is_permutation()) {
        if (zeta.size() != perm_.size()) throw std::invalid_argument("weyl/weight size mismatch");
        Weight out(zeta.size());
        for (std::size_t i = 0; i < perm_.size(); ++i) out[perm_[i]] = zeta[i];
        return out;
    }
    const std::size_t r = mat_.size();
    if (zeta.size() != r) throw std::invalid_argument("weyl/weight size mismatch");
    Weight out(r);
    for (std::size_t i = 0; i < r; ++i) {
        QQ s = 0;
        for (std::size_t j = 0; j < r; ++j)
            if (mat_[i][j] != 0) s += QQ(mat_[i][j]) * zeta[j];
        out[i] = s;
    }
    return out;
}

WeylElement WeylElement::compose(const WeylElement& other) const {
    std::vector<int> word = other.word_;
    word.insert(word.end(), word_.begin(), word_.end());
    // word is "apply other's word first"; stored words read left-to-right as applied
    if (is_permutation()) {
        if (perm_.size() != other.perm_.size()) throw std::invalid_argument("weyl size mismatch");
        std::vector<int> p(perm_.size());
        for (std::size_t i = 0; i < perm_.size(); ++i) p[i] = perm_[other.perm_[i]];
        return from_perm(std::move(p), std::move(word));
    }
    const std::size_t r = mat_.size();
    std::vector<std::vector<long long>> m(r, std::vector<long long>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) {
            if (mat_[i][k] == 0) continue;
            for (std::size_t j = 0; j < r; ++j) m[i][j] += mat_[i][k] * other.mat_[k][j];
        }
    return from_matrix(std::move(m), std::move(word));
}

WeylElement WeylElement::inverse() const {
    std::vector<int> word(word_.rbegin(), word_.rend());   // generators are involutions
    if (is_permutation()) {
        std::vector<int> p(perm_.size());
        for (std::size_t i = 0; i < perm_.size(); ++i) p[perm_[i]] = static_cast<int>(i);
        return from_perm(std::move(p), std::move(word));
    }
    // Generic elements are products of involutions; rebuild from the reversed word
    // is not available without the generators, so invert the integer matrix by
    // exact elimination (determinant is +-1).
    const std::size_t r = mat_.size();
    std::vector<std::vector<QQ>> a(r, std::vector<QQ>(2 * r, 0));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) a[i][j] = QQ(mat_[i][j]);
        a[i][r + i] = 1;
    }
    for (std::size_t col = 0; col < r; ++col) {
        std::size_t piv = col;
        while (piv < r && a[piv][col] == 0) ++piv;
        if (piv == r) throw std::logic_error("singular weyl matrix");
        std::swap(a[piv], a[col]);
        QQ d = a[col][col];
        for (auto& x : a[col]) x /= d;
        for (std::size_t i = 0; i < r; ++i) {
            if (i == col || a[i][col] == 0) continue;
            QQ f = a[i][col];
            for (std::size_t j = 0; j < 2 * r; ++j) a[i][j] -= f * a[col][j];
        }
    }
    std::vector<std::vector<long long>> inv(r, std::vector<long long>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const QQ& q = a[i][r + j];
            if (denominator(q) != 1) throw std::logic_error("non-integral weyl inverse");
            inv[i][j] = numerator(q).convert_to<long long>();
        }
    return from_matrix(std::move(inv), std::move(word));
}

bool WeylElement::operator==(const WeylElement& o) const {
    if (is_permutation() != o.is_permutation()) return false;
    return is_permutation() ? perm_ == o.perm_ : mat_ == o.mat_;
}

std::vector<long long> WeylElement::key() const {
    if (is_permutation()) return std::vector<long long>(perm_.begin(), perm_.end());
    std::vector<long long> k;
    k.reserve(mat_.size() * mat_.size());
    for (const auto& row : mat_) k.insert(k.end(), row.begin(), row.end());
    return k;
}

}  // namespace sympl
