// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#pragma once

#include "noma/model.hpp"

namespace noma::fixtures {

inline LinkPowers fig2_alpha() { return {5.0, 1.0, 1.0, 2.0, 10.0}; }

inline SystemParams fig2_params(double rho_db, double a1 = 0.9, double b1 = 0.6)
{
    return {a1, b1, db_to_linear(rho_db), fig2_alpha()};
}

// Fig. 4 set; alpha_SU2 is not listed in the caption and is taken as 1.
inline SystemParams fig4_params(double rho_db)
{
    return {0.9, 0.6, db_to_linear(rho_db), {5.0, 1.0, 2.0, 1.0, 10.0}};
}

inline SystemParams fig5_params(double rho_db, double b1 = 0.6)
{
    return {0.9, b1, db_to_linear(rho_db), {20.0, 1.0, 10.0, 25.0, 30.0}};
}

}  // namespace noma::fixtures
