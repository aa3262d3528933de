#pragma once

#include <functional>
#include <string>
#include <vector>

namespace mayer {

// Bijection of {1..n} with the fixed convention sigma(0) = 0.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images); // images[k-1] = sigma(k)

    static Permutation identity(int n);

    int n() const { return static_cast<int>(images_.size()); }
    int operator()(int k) const { return k == 0 ? 0 : images_[k - 1]; }

    Permutation inverse() const;
    const std::vector<int>& images() const { return images_; }

    // One-line word, e.g. "21" for sigma(1)=2, sigma(2)=1.
    std::string word() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.images_ < b.images_;
    }

private:
    std::vector<int> images_;
};

// Visits all n! permutations of {1..n} in lexicographic order of their images.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

} // namespace mayer
