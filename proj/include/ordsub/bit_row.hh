/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ORDSUB_GUARD_ORDSUB_BIT_ROW_HH
#define ORDSUB_GUARD_ORDSUB_BIT_ROW_HH 1

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace ordsub
{
    using Word = std::uint64_t;
    inline constexpr int bits_per_word = 64;

    [[nodiscard]] constexpr auto words_for(int bits) -> int
    {
        return (bits + bits_per_word - 1) / bits_per_word;
    }

    [[nodiscard]] inline auto test_bit(std::span<const Word> row, int i) -> bool
    {
        return (row[i / bits_per_word] >> (i % bits_per_word)) & 1;
    }

    inline auto set_bit(std::span<Word> row, int i) -> void
    {
        row[i / bits_per_word] |= Word{ 1 } << (i % bits_per_word);
    }

    inline auto reset_bit(std::span<Word> row, int i) -> void
    {
        row[i / bits_per_word] &= ~(Word{ 1 } << (i % bits_per_word));
    }

    // Smallest index in [from, to) whose bit is set in the word stream produced
    // by word_at(k), or -1. word_at lets callers combine rows (a & ~b, ...)
    // without materialising the result.
    template <typename WordAt_>
    [[nodiscard]] auto first_set_in(const WordAt_ & word_at, int from, int to) -> int
    {
        if (from < 0)
            from = 0;
        if (from >= to)
            return -1;

        int k = from / bits_per_word;
        const int last = (to - 1) / bits_per_word;
        Word w = word_at(k) & (~Word{ 0 } << (from % bits_per_word));
        while (true) {
            if (k == last) {
                int top = to - k * bits_per_word;
                if (top < bits_per_word)
                    w &= (Word{ 1 } << top) - 1;
                if (w == 0)
                    return -1;
                return k * bits_per_word + std::countr_zero(w);
            }
            if (w != 0)
                return k * bits_per_word + std::countr_zero(w);
            ++k;
            w = word_at(k);
        }
    }

    [[nodiscard]] inline auto first_set(std::span<const Word> row, int from, int to) -> int
    {
        return first_set_in([&](int k) { return row[k]; }, from, to);
    }

    [[nodiscard]] inline auto popcount(std::span<const Word> row) -> int
    {
        int result = 0;
        for (auto w : row)
            result += std::popcount(w);
        return result;
    }

    // Dense square bit matrix, row-major.
    class BitMatrix
    {
        private:
            int _size = 0;
            int _words = 0;
            std::vector<Word> _bits;

        public:
            BitMatrix() = default;

            explicit BitMatrix(int size) :
                _size(size),
                _words(words_for(size)),
                _bits(static_cast<std::size_t>(size) * words_for(size), 0)
            {
            }

            [[nodiscard]] auto size() const -> int
            {
                return _size;
            }

            [[nodiscard]] auto words_per_row() const -> int
            {
                return _words;
            }

            [[nodiscard]] auto row(int i) const -> std::span<const Word>
            {
                return { _bits.data() + static_cast<std::size_t>(i) * _words, static_cast<std::size_t>(_words) };
            }

            [[nodiscard]] auto row(int i) -> std::span<Word>
            {
                return { _bits.data() + static_cast<std::size_t>(i) * _words, static_cast<std::size_t>(_words) };
            }

            [[nodiscard]] auto test(int i, int j) const -> bool
            {
                return test_bit(row(i), j);
            }

            auto set(int i, int j) -> void
            {
                set_bit(row(i), j);
            }

            [[nodiscard]] auto operator== (const BitMatrix &) const -> bool = default;
    };
}

#endif
