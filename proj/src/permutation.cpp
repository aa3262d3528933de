#include "mayer/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mayer {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > n() || seen[v - 1])
            throw std::invalid_argument("images do not form a permutation of {1..n}");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int k = 1; k <= n(); ++k) inv[images_[k - 1] - 1] = k;
    return Permutation(std::move(inv));
}

std::string Permutation::word() const {
    std::string out;
    for (int k = 1; k <= n(); ++k) {
        if (n() > 9 && k > 1) out += ',';
        out += std::to_string(images_[k - 1]);
    }
    return out;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    do {
        fn(Permutation(images));
    } while (std::next_permutation(images.begin(), images.end()));
}

} // namespace mayer
