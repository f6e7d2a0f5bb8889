#pragma once

// Frozen golden reports for the built-in corpus. Regenerate with
// `stability-forge corpus emit <name>` and review every field before
// updating: these bytes are the contract.

namespace stabforge {

inline constexpr const char* kGoldenConicE1 = R"GOLDEN({
  "job": {
    "variables": 3,
    "generators": [
      "-x1^2 + x0*x2"
    ],
    "weight": [
      1,
      -1,
      0
    ],
    "tasks": [
      "report"
    ],
    "options": {
      "m_cap": 40,
      "budget": {
        "max_pairs": 20000,
        "max_terms": 200000
      },
      "fd_slope": "0"
    }
  },
  "hilbert": {
    "P": "2*m + 1",
    "claimed_from": 1,
    "n": 1,
    "d": 2,
    "b_top": "2",
    "b_sub": "1",
    "mu": "1"
  },
  "weightpoly": {
    "W": "-1/2*m^2 + 1/2*m",
    "claimed_from": 1,
    "a_top": "-1/2",
    "a_sub": "1/2"
  },
  "F1": "3/8",
  "hypersurface": {
    "mu_lambda_f": "1",
    "lu_slope": "3/2",
    "refined_futaki": "3/2",
    "multiplicity_free": true,
    "mabuchi_coefficient": "-3/2"
  },
  "chow": {
    "genus": 0,
    "bidegree": {
      "d1": 1,
      "d2": 0
    },
    "D": 1,
    "beta": 1,
    "nu1": "3",
    "nu2": "2",
    "volume_singular_divisor": "0"
  },
  "verdicts": [
    {
      "lambda": [
        1,
        -1,
        0
      ],
      "slope_RX": "1",
      "slope_fD": "0",
      "margin": "3/2",
      "witness": "stable-witness",
      "note": "witness for this 1-psg only; stability requires a positive margin for every 1-psg"
    }
  ],
  "diagnostics": [
    {
      "severity": "warning",
      "message": "bidegree uses arithmetic genus 1 - P(0); equal to the geometric genus only for smooth curves (caller asserts smoothness)"
    }
  ]
}
)GOLDEN";

inline constexpr const char* kGoldenConicE2 = R"GOLDEN({
  "job": {
    "variables": 3,
    "generators": [
      "-x1^2 + x0*x2"
    ],
    "weight": [
      1,
      1,
      -2
    ],
    "tasks": [
      "report"
    ],
    "options": {
      "m_cap": 40,
      "budget": {
        "max_pairs": 20000,
        "max_terms": 200000
      },
      "fd_slope": "0"
    }
  },
  "hilbert": {
    "P": "2*m + 1",
    "claimed_from": 1,
    "n": 1,
    "d": 2,
    "b_top": "2",
    "b_sub": "1",
    "mu": "1"
  },
  "weightpoly": {
    "W": "-m^2 + m",
    "claimed_from": 1,
    "a_top": "-1",
    "a_sub": "1"
  },
  "F1": "3/4",
  "hypersurface": {
    "mu_lambda_f": "2",
    "lu_slope": "0",
    "refined_futaki": "3",
    "multiplicity_free": false
  },
  "chow": {
    "genus": 0,
    "bidegree": {
      "d1": 1,
      "d2": 0
    },
    "D": 1,
    "beta": 1,
    "nu1": "3",
    "nu2": "2",
    "volume_singular_divisor": "0"
  },
  "verdicts": [
    {
      "lambda": [
        1,
        1,
        -2
      ],
      "slope_RX": "2",
      "slope_fD": "0",
      "margin": "3",
      "witness": "stable-witness",
      "note": "witness for this 1-psg only; stability requires a positive margin for every 1-psg"
    }
  ],
  "diagnostics": [
    {
      "severity": "warning",
      "message": "mabuchi coefficient unavailable: degeneration has multiple fibers"
    },
    {
      "severity": "warning",
      "message": "bidegree uses arithmetic genus 1 - P(0); equal to the geometric genus only for smooth curves (caller asserts smoothness)"
    }
  ]
}
)GOLDEN";

inline constexpr const char* kGoldenConicE3 = R"GOLDEN({
  "job": {
    "variables": 3,
    "generators": [
      "-x1^2 + x0*x2"
    ],
    "weight": [
      1,
      0,
      -1
    ],
    "tasks": [
      "report"
    ],
    "options": {
      "m_cap": 40,
      "budget": {
        "max_pairs": 20000,
        "max_terms": 200000
      },
      "fd_slope": "0"
    }
  },
  "hilbert": {
    "P": "2*m + 1",
    "claimed_from": 1,
    "n": 1,
    "d": 2,
    "b_top": "2",
    "b_sub": "1",
    "mu": "1"
  },
  "weightpoly": {
    "W": "0",
    "claimed_from": 1,
    "a_top": "0",
    "a_sub": "0"
  },
  "F1": "0",
  "hypersurface": {
    "mu_lambda_f": "0",
    "lu_slope": "0",
    "refined_futaki": "0",
    "multiplicity_free": true,
    "mabuchi_coefficient": "0"
  },
  "chow": {
    "genus": 0,
    "bidegree": {
      "d1": 1,
      "d2": 0
    },
    "D": 1,
    "beta": 1,
    "nu1": "3",
    "nu2": "2",
    "volume_singular_divisor": "0"
  },
  "verdicts": [
    {
      "lambda": [
        1,
        0,
        -1
      ],
      "slope_RX": "0",
      "slope_fD": "0",
      "margin": "0",
      "witness": "not-stable-witness",
      "note": "witness for this 1-psg only; stability requires a positive margin for every 1-psg"
    }
  ],
  "diagnostics": [
    {
      "severity": "warning",
      "message": "bidegree uses arithmetic genus 1 - P(0); equal to the geometric genus only for smooth curves (caller asserts smoothness)"
    }
  ]
}
)GOLDEN";

inline constexpr const char* kGoldenTwistedTorus = R"GOLDEN({
  "job": {
    "variables": 4,
    "generators": [
      "-x1^2 + x0*x2",
      "-x2^2 + x1*x3",
      "-x1*x2 + x0*x3"
    ],
    "weight": [
      3,
      1,
      -1,
      -3
    ],
    "tasks": [
      "report"
    ],
    "options": {
      "m_cap": 40,
      "budget": {
        "max_pairs": 20000,
        "max_terms": 200000
      },
      "fd_slope": "0"
    }
  },
  "hilbert": {
    "P": "3*m + 1",
    "claimed_from": 1,
    "n": 1,
    "d": 3,
    "b_top": "3",
    "b_sub": "1",
    "mu": "2/3"
  },
  "weightpoly": {
    "W": "0",
    "claimed_from": 1,
    "a_top": "0",
    "a_sub": "0"
  },
  "F1": "0",
  "chow": {
    "genus": 0,
    "bidegree": {
      "d1": 3,
      "d2": 1
    },
    "D": 2,
    "beta": 1,
    "nu1": "20/3",
    "nu2": "1",
    "volume_singular_divisor": "8"
  },
  "verdicts": [
    {
      "lambda": [
        3,
        1,
        -1,
        -3
      ],
      "slope_RX": "0",
      "slope_fD": "0",
      "margin": "0",
      "witness": "not-stable-witness",
      "note": "witness for this 1-psg only; stability requires a positive margin for every 1-psg"
    }
  ],
  "diagnostics": [
    {
      "severity": "warning",
      "message": "hypersurface block skipped: ideal is not principal"
    },
    {
      "severity": "warning",
      "message": "bidegree uses arithmetic genus 1 - P(0); equal to the geometric genus only for smooth curves (caller asserts smoothness)"
    }
  ]
}
)GOLDEN";

inline constexpr const char* kGoldenTwistedDegen = R"GOLDEN({
  "job": {
    "variables": 4,
    "generators": [
      "-x1^2 + x0*x2",
      "-x2^2 + x1*x3",
      "-x1*x2 + x0*x3"
    ],
    "weight": [
      1,
      0,
      0,
      -1
    ],
    "tasks": [
      "report"
    ],
    "options": {
      "m_cap": 40,
      "budget": {
        "max_pairs": 20000,
        "max_terms": 200000
      },
      "fd_slope": "0"
    }
  },
  "hilbert": {
    "P": "3*m + 1",
    "claimed_from": 1,
    "n": 1,
    "d": 3,
    "b_top": "3",
    "b_sub": "1",
    "mu": "2/3"
  },
  "weightpoly": {
    "W": "-1/2*m^2 + 1/2*m",
    "claimed_from": 1,
    "a_top": "-1/2",
    "a_sub": "1/2"
  },
  "F1": "2/9",
  "chow": {
    "genus": 0,
    "bidegree": {
      "d1": 3,
      "d2": 1
    },
    "D": 2,
    "beta": 1,
    "nu1": "20/3",
    "nu2": "1",
    "volume_singular_divisor": "8"
  },
  "verdicts": [
    {
      "lambda": [
        1,
        0,
        0,
        -1
      ],
      "slope_RX": "1",
      "slope_fD": "0",
      "margin": "10/3",
      "witness": "stable-witness",
      "note": "witness for this 1-psg only; stability requires a positive margin for every 1-psg"
    }
  ],
  "diagnostics": [
    {
      "severity": "warning",
      "message": "hypersurface block skipped: ideal is not principal"
    },
    {
      "severity": "warning",
      "message": "bidegree uses arithmetic genus 1 - P(0); equal to the geometric genus only for smooth curves (caller asserts smoothness)"
    }
  ]
}
)GOLDEN";

inline constexpr const char* kGoldenFermat = R"GOLDEN({
  "job": {
    "variables": 4,
    "generators": [
      "x0^3 + x1^3 + x2^3 + x3^3"
    ],
    "weight": [
      1,
      1,
      -1,
      -1
    ],
    "tasks": [
      "report"
    ],
    "options": {
      "m_cap": 40,
      "budget": {
        "max_pairs": 20000,
        "max_terms": 200000
      },
      "fd_slope": "0"
    }
  },
  "hilbert": {
    "P": "3/2*m^2 + 3/2*m + 1",
    "claimed_from": 1,
    "n": 2,
    "d": 3,
    "b_top": "3/2",
    "b_sub": "3/2",
    "mu": "2"
  },
  "weightpoly": {
    "W": "-1/2*m^3 + 3/2*m^2 - m",
    "claimed_from": 1,
    "a_top": "-1/2",
    "a_sub": "3/2"
  },
  "F1": "4/3",
  "hypersurface": {
    "mu_lambda_f": "3",
    "lu_slope": "16/3",
    "refined_futaki": "16/3",
    "multiplicity_free": true,
    "mabuchi_coefficient": "-16/3"
  },
  "chow": {
    "D": 1,
    "beta": 1,
    "nu1": "8",
    "nu2": "3",
    "volume_singular_divisor": "0"
  },
  "verdicts": [
    {
      "lambda": [
        1,
        1,
        -1,
        -1
      ],
      "slope_RX": "3",
      "slope_fD": "0",
      "margin": "8",
      "witness": "stable-witness",
      "note": "witness for this 1-psg only; stability requires a positive margin for every 1-psg"
    }
  ],
  "diagnostics": [
    {
      "severity": "warning",
      "message": "bidegree skipped: defined for curves (n = 1) only"
    }
  ]
}
)GOLDEN";

inline constexpr const char* kGoldenNodalCubic = R"GOLDEN({
  "job": {
    "variables": 3,
    "generators": [
      "-x0^3 - x0^2*x2 + x1^2*x2"
    ],
    "weight": [
      1,
      0,
      -1
    ],
    "tasks": [
      "report"
    ],
    "options": {
      "m_cap": 40,
      "budget": {
        "max_pairs": 20000,
        "max_terms": 200000
      },
      "fd_slope": "0"
    }
  },
  "hilbert": {
    "P": "3*m",
    "claimed_from": 1,
    "n": 1,
    "d": 3,
    "b_top": "3",
    "b_sub": "0",
    "mu": "0"
  },
  "weightpoly": {
    "W": "-3/2*m^2 + 9/2*m - 3",
    "claimed_from": 1,
    "a_top": "-3/2",
    "a_sub": "9/2"
  },
  "F1": "3/2",
  "hypersurface": {
    "mu_lambda_f": "3",
    "lu_slope": "2/3",
    "refined_futaki": "6",
    "multiplicity_free": false
  },
  "chow": {
    "genus": 1,
    "bidegree": {
      "d1": 3,
      "d2": 0
    },
    "D": 1,
    "beta": 1,
    "nu1": "6",
    "nu2": "2",
    "volume_singular_divisor": "0"
  },
  "verdicts": [
    {
      "lambda": [
        1,
        0,
        -1
      ],
      "slope_RX": "3",
      "slope_fD": "0",
      "margin": "9",
      "witness": "stable-witness",
      "note": "witness for this 1-psg only; stability requires a positive margin for every 1-psg"
    }
  ],
  "diagnostics": [
    {
      "severity": "warning",
      "message": "mabuchi coefficient unavailable: degeneration has multiple fibers"
    },
    {
      "severity": "warning",
      "message": "bidegree uses arithmetic genus 1 - P(0); equal to the geometric genus only for smooth curves (caller asserts smoothness)"
    }
  ]
}
)GOLDEN";

}  // namespace stabforge
