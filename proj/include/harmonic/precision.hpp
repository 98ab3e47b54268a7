#pragma once

#include <stdexcept>

namespace harmonic {

/// Knobs for certified evaluation: working mantissa size and how many times a
/// caller may double it when an enclosure is too wide to decide a question.
struct PrecisionConfig {
    long bits = 128;
    int max_refinements = 8;

    void validate() const {
        if (bits < 32) throw std::invalid_argument("precision bits must be >= 32");
        if (max_refinements < 0) throw std::invalid_argument("max_refinements must be >= 0");
    }

    PrecisionConfig refined(int step) const {
        PrecisionConfig c = *this;
        for (int i = 0; i < step; ++i) c.bits *= 2;
        return c;
    }
};

}  // namespace harmonic
