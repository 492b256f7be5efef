#pragma once

#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tautgraph {

/// A map of finite index sets {1..s} -> {1..r}. Parameterizes the
/// tautological morphisms and the graph functors built on them.
class SetMap {
public:
    SetMap(int source_size, int target_size, std::vector<int> images)
        : source_(source_size), target_(target_size), images_(std::move(images)) {
        if (source_ < 0 || target_ < 0)
            throw std::invalid_argument("SetMap: negative set size");
        if (static_cast<int>(images_.size()) != source_)
            throw std::invalid_argument("SetMap: image list length differs from source size");
        for (int v : images_)
            if (v < 1 || v > target_)
                throw std::invalid_argument("SetMap: image " + std::to_string(v) +
                                            " out of range 1.." + std::to_string(target_));
    }

    static SetMap identity(int n) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 1);
        return SetMap(n, n, std::move(im));
    }

    /// The injection {1..|kept|} -> {1..r} hitting `kept` in the given order.
    static SetMap keeping(int r, const std::vector<int>& kept) {
        return SetMap(static_cast<int>(kept.size()), r, kept);
    }

    /// The increasing injection {1..r-|forgotten|} -> {1..r} whose image is
    /// the complement of `forgotten` (the paper's coordinate-forgetting maps).
    static SetMap forgetting(int r, const std::vector<int>& forgotten) {
        std::set<int> drop(forgotten.begin(), forgotten.end());
        if (static_cast<int>(drop.size()) != static_cast<int>(forgotten.size()))
            throw std::invalid_argument("SetMap::forgetting: duplicate mark");
        std::vector<int> kept;
        for (int i = 1; i <= r; ++i)
            if (!drop.count(i)) kept.push_back(i);
        if (kept.size() + drop.size() != static_cast<std::size_t>(r))
            throw std::invalid_argument("SetMap::forgetting: mark out of range");
        return keeping(r, kept);
    }

    [[nodiscard]] int source_size() const { return source_; }
    [[nodiscard]] int target_size() const { return target_; }
    [[nodiscard]] const std::vector<int>& images() const { return images_; }

    [[nodiscard]] int operator()(int k) const {
        if (k < 1 || k > source_)
            throw std::invalid_argument("SetMap: argument out of range");
        return images_[k - 1];
    }

    [[nodiscard]] bool is_injective() const {
        std::set<int> seen(images_.begin(), images_.end());
        return static_cast<int>(seen.size()) == source_;
    }

    friend bool operator==(const SetMap& a, const SetMap& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.images_ == b.images_;
    }

private:
    int source_;
    int target_;
    std::vector<int> images_;
};

/// Ordinary composition phi . psi (apply psi first).
inline SetMap compose(const SetMap& phi, const SetMap& psi) {
    if (psi.target_size() != phi.source_size())
        throw std::invalid_argument("compose: incompatible set sizes");
    std::vector<int> im(psi.source_size());
    for (int k = 1; k <= psi.source_size(); ++k) im[k - 1] = phi(psi(k));
    return SetMap(psi.source_size(), phi.target_size(), std::move(im));
}

} // namespace tautgraph
