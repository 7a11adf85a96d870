#pragma once

#include <cstddef>
#include <deque>
#include <initializer_list>
#include <stdexcept>
#include <string>

#include "embgo/random.hpp"

namespace embgo::testing {

/// Replays fixed draws; running dry is a test bug and throws.
class ScriptedRandom final : public Random {
public:
    ScriptedRandom(std::initializer_list<double> uniforms = {}, std::initializer_list<double> normals = {},
                   std::initializer_list<std::size_t> indices = {})
        : uniforms_(uniforms), normals_(normals), indices_(indices)
    {
    }

    double uniform() override { return next(uniforms_, "uniform"); }
    double normal() override { return next(normals_, "normal"); }
    std::size_t below(std::size_t n) override
    {
        const std::size_t k = next(indices_, "below");
        if (k >= n)
            throw std::logic_error("scripted index out of range");
        return k;
    }
    using Random::uniform;

    void push_uniform(double u) { uniforms_.push_back(u); }
    void push_normal(double z) { normals_.push_back(z); }
    void push_index(std::size_t k) { indices_.push_back(k); }

    bool drained() const { return uniforms_.empty() && normals_.empty() && indices_.empty(); }

private:
    template <class T>
    static T next(std::deque<T>& q, const char* what)
    {
        if (q.empty())
            throw std::logic_error(std::string("scripted ") + what + " queue is empty");
        T v = q.front();
        q.pop_front();
        return v;
    }

    std::deque<double> uniforms_;
    std::deque<double> normals_;
    std::deque<std::size_t> indices_;
};

} // namespace embgo::testing
