#pragma once

#include <vector>

#include "permpat/bigint.hpp"
#include "permpat/errors.hpp"

namespace permpat {

/// Integer sequence with an explicit start index: terms[t] is the value at
/// absolute index start_index + t.
struct Sequence {
    long long start_index = 0;
    std::vector<BigInt> terms;

    long long end_index() const {
        return start_index + static_cast<long long>(terms.size()) - 1;
    }
    bool has(long long idx) const { return idx >= start_index && idx <= end_index(); }
    const BigInt& at(long long idx) const {
        if (!has(idx)) throw DomainError("Sequence::at: index out of range");
        return terms[static_cast<std::size_t>(idx - start_index)];
    }
};

} // namespace permpat
