#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace tclose
{
    using Vertex = std::uint32_t;

    /**
     * Fixed-capacity bitset over vertex ids.
     *
     * The scan-heavy parameter code intersects and counts neighbourhoods in
     * its inner loops, so the in-place and counting operations here never
     * allocate.
     */
    class VertexSet
    {
        private:
            std::vector<std::uint64_t> _words;
            std::size_t _capacity = 0;

        public:
            VertexSet() = default;

            explicit VertexSet(std::size_t capacity) :
                _words((capacity + 63) / 64, 0),
                _capacity(capacity)
            {
            }

            static auto full(std::size_t capacity) -> VertexSet
            {
                VertexSet result(capacity);
                for (std::size_t v = 0 ; v < capacity ; ++v)
                    result.set(v);
                return result;
            }

            auto capacity() const -> std::size_t
            {
                return _capacity;
            }

            auto set(std::size_t v) -> void
            {
                _words[v / 64] |= std::uint64_t{1} << (v % 64);
            }

            auto reset(std::size_t v) -> void
            {
                _words[v / 64] &= ~(std::uint64_t{1} << (v % 64));
            }

            auto test(std::size_t v) const -> bool
            {
                return (_words[v / 64] >> (v % 64)) & 1;
            }

            auto clear() -> void
            {
                for (auto & w : _words)
                    w = 0;
            }

            auto count() const -> std::size_t
            {
                std::size_t result = 0;
                for (auto w : _words)
                    result += std::popcount(w);
                return result;
            }

            auto none() const -> bool
            {
                for (auto w : _words)
                    if (w)
                        return false;
                return true;
            }

            auto operator|= (const VertexSet & other) -> VertexSet &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] |= other._words[i];
                return *this;
            }

            auto operator&= (const VertexSet & other) -> VertexSet &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= other._words[i];
                return *this;
            }

            auto subtract(const VertexSet & other) -> VertexSet &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= ~other._words[i];
                return *this;
            }

            auto is_subset_of(const VertexSet & other) const -> bool
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    if (_words[i] & ~other._words[i])
                        return false;
                return true;
            }

            /// |this ∖ other|
            auto difference_count(const VertexSet & other) const -> std::size_t
            {
                std::size_t result = 0;
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    result += std::popcount(_words[i] & ~other._words[i]);
                return result;
            }

            /// |this ∩ other ∩ mask|
            auto intersection_count(const VertexSet & other, const VertexSet & mask) const -> std::size_t
            {
                std::size_t result = 0;
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    result += std::popcount(_words[i] & other._words[i] & mask._words[i]);
                return result;
            }

            auto intersection_count(const VertexSet & other) const -> std::size_t
            {
                std::size_t result = 0;
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    result += std::popcount(_words[i] & other._words[i]);
                return result;
            }

            template <typename F_>
            auto for_each(F_ && f) const -> void
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i) {
                    auto w = _words[i];
                    while (w) {
                        int bit = std::countr_zero(w);
                        f(static_cast<Vertex>(i * 64 + bit));
                        w &= w - 1;
                    }
                }
            }

            auto to_vector() const -> std::vector<Vertex>
            {
                std::vector<Vertex> result;
                for_each([&] (Vertex v) { result.push_back(v); });
                return result;
            }

            auto operator== (const VertexSet &) const -> bool = default;
    };
}
