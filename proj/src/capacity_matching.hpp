#pragma once

#include <cstddef>
#include <vector>

namespace rainbow::detail {

/// Maximum assignment of left nodes to right nodes where right node k may
/// take up to capacity[k] left nodes (Kuhn's augmenting paths).
class CapacityMatching {
public:
    CapacityMatching(const std::vector<std::vector<std::size_t>>& left_adj,
                     const std::vector<std::size_t>& capacity)
        : adj_(left_adj), capacity_(capacity), load_(capacity.size())
    {
    }

    std::size_t solve()
    {
        std::size_t matched = 0;
        for (std::size_t u = 0; u < adj_.size(); ++u) {
            visited_.assign(capacity_.size(), 0);
            if (augment(u))
                ++matched;
        }
        return matched;
    }

private:
    bool augment(std::size_t u)
    {
        for (std::size_t k : adj_[u]) {
            if (visited_[k])
                continue;
            visited_[k] = 1;
            if (load_[k].size() < capacity_[k]) {
                load_[k].push_back(u);
                return true;
            }
            for (std::size_t& other : load_[k]) {
                if (augment(other)) {
                    other = u;
                    return true;
                }
            }
        }
        return false;
    }

    const std::vector<std::vector<std::size_t>>& adj_;
    const std::vector<std::size_t>& capacity_;
    std::vector<std::vector<std::size_t>> load_;
    std::vector<char> visited_;
};

}  // namespace rainbow::detail
