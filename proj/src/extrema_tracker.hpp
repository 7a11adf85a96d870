#pragma once

#include <cstddef>

#include "embgo/core.hpp"

namespace embgo::detail {

/// Best and worst member indices under greedy replacement, where a member's
/// fitness only ever decreases. Same tie rule as best_worst_index.
class ExtremaTracker {
public:
    explicit ExtremaTracker(const Population& pop) : pop_(pop) { rescan(); }

    std::size_t best() const noexcept { return best_; }
    std::size_t worst() const noexcept { return worst_; }

    /// Call after member i was replaced by a fitter offspring.
    void improved(std::size_t i)
    {
        const double f = pop_[i].f();
        const double best_f = pop_[best_].f();
        if (f < best_f || (f == best_f && i < best_))
            best_ = i;
        if (i == worst_)
            rescan_worst();
    }

    void rescan()
    {
        auto [b, w] = best_worst_index(pop_);
        best_ = b;
        worst_ = w;
    }

private:
    void rescan_worst()
    {
        std::size_t w = 0;
        for (std::size_t k = 1; k < pop_.size(); ++k) {
            if (pop_[k].f() > pop_[w].f())
                w = k;
        }
        worst_ = w;
    }

    const Population& pop_;
    std::size_t best_ = 0;
    std::size_t worst_ = 0;
};

} // namespace embgo::detail
