#pragma once

#include "oracle.hpp"
#include "spectral_perturb/linalg.hpp"
#include "spectral_perturb/rng.hpp"

namespace support {

inline oracle::Dense dense(const spectral_perturb::SymmetricMatrix& m) {
    oracle::Dense out(m.dim(), std::vector<double>(m.dim()));
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) out[i][j] = m(i, j);
    return out;
}

inline oracle::Dense dense(const spectral_perturb::BorderedSpec& s) {
    return oracle::bordered(dense(s.m), s.a, s.c);
}

}  // namespace support
