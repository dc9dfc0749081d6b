#pragma once

// Printed example elements and their representation matrices, entries in the
// scalar grammar. Signed Z_p entries are kept as printed; parsing reduces them.

#include <string>
#include <vector>

#include "kpotent/exactfield.hpp"
#include "kpotent/represent.hpp"

namespace testsupport {

struct MatrixFixture {
    std::string name;
    std::string field;
    std::string params;
    std::string coords;
    std::string map;
    std::vector<std::vector<std::string>> rows;
};

inline kpotent::SquareMatrix expected_matrix(const MatrixFixture& f) {
    const auto field = kpotent::FieldSpec::parse(f.field);
    std::vector<std::vector<kpotent::FieldElement>> rows;
    for (const auto& r : f.rows) {
        rows.emplace_back();
        for (const auto& s : r) rows.back().push_back(field.parse_scalar(s));
    }
    return kpotent::SquareMatrix::from_rows(field, rows);
}

inline std::vector<MatrixFixture> printed_matrices() {
    const std::string h = "1/2", m = "-1/2";
    const std::string r2 = "1/2s", n2 = "-1/2s";
    return {
        {"zp5_phi", "f5", "-1,-1", "2,3,1,3", "phi",
         {{"2", "-3", "-1", "-3"}, {"3", "2", "-3", "1"}, {"1", "3", "2", "-3"}, {"3", "-1", "3", "2"}}},
        {"zp5_rho", "f5", "-1,-1", "2,3,1,3", "rho",
         {{"2", "-3", "-1", "-3"}, {"3", "2", "3", "-1"}, {"1", "-3", "2", "3"}, {"3", "1", "-3", "2"}}},
        {"zp13_Phi", "f13", "-1,-1,-1", "3,2,1,1,1,1,1,1", "Phi",
         {{"3", "-2", "-1", "-1", "-1", "-1", "-1", "-1"},
          {"2", "3", "-1", "1", "-1", "1", "1", "-1"},
          {"1", "1", "3", "-2", "-1", "-1", "1", "1"},
          {"1", "-1", "2", "3", "-1", "1", "-1", "1"},
          {"1", "1", "1", "1", "3", "-2", "-1", "-1"},
          {"1", "-1", "1", "-1", "2", "3", "1", "-1"},
          {"1", "-1", "-1", "1", "1", "-1", "3", "2"},
          {"1", "1", "-1", "-1", "1", "1", "-2", "3"}}},
        {"zp13_Psi", "f13", "-1,-1,-1", "3,2,1,1,1,1,1,1", "Psi",
         {{"3", "-2", "-1", "-1", "-1", "-1", "-1", "-1"},
          {"2", "3", "1", "-1", "1", "-1", "-1", "1"},
          {"1", "-1", "3", "2", "1", "1", "-1", "-1"},
          {"1", "1", "-2", "3", "1", "-1", "1", "-1"},
          {"1", "-1", "-1", "-1", "3", "2", "1", "1"},
          {"1", "1", "-1", "1", "-2", "3", "-1", "1"},
          {"1", "1", "1", "-1", "-1", "1", "3", "-2"},
          {"1", "-1", "1", "1", "-1", "-1", "2", "3"}}},
        {"rotor7_phi", "q", "-1,-1", "1/2,1/2,1/2,1/2", "phi", {{h, m, m, m}, {h, h, m, h}, {h, h, h, m}, {h, m, h, h}}},
        {"rotor7_rho", "q", "-1,-1", "1/2,1/2,1/2,1/2", "rho", {{h, m, m, m}, {h, h, h, m}, {h, m, h, h}, {h, h, m, h}}},
        {"rotor4_phi", "q", "-1,-1", "-1/2,1/2,-1/2,1/2", "phi",
         {{m, m, h, m}, {h, m, m, m}, {m, h, m, m}, {h, h, h, m}}},
        {"rotor4_rho", "q", "-1,-1", "-1/2,1/2,-1/2,1/2", "rho",
         {{m, m, h, m}, {h, m, h, h}, {m, m, m, h}, {h, m, m, m}}},
        {"rotor5_phi", "q[sqrt2]", "-1,-1", "0,1/2,-1/2,1/2s", "phi",
         {{"0", m, h, n2}, {h, "0", n2, m}, {m, r2, "0", m}, {r2, h, h, "0"}}},
        {"rotor5_rho", "q[sqrt2]", "-1,-1", "0,1/2,-1/2,1/2s", "rho",
         {{"0", m, h, n2}, {h, "0", r2, h}, {m, n2, "0", h}, {r2, m, m, "0"}}},
        {"split_q_phi", "q", "1,1", "1/2,1/2,1/2,1/2", "phi", {{h, h, h, m}, {h, h, h, m}, {h, m, h, h}, {h, m, h, h}}},
        {"split_q_rho", "q", "1,1", "1/2,1/2,1/2,1/2", "rho", {{h, h, h, m}, {h, h, m, h}, {h, h, h, m}, {h, h, m, h}}},
        {"split_w_phi", "q", "1,1", "-1/2,1/2,1/2,1/2", "phi",
         {{m, h, h, m}, {h, m, h, m}, {h, m, m, h}, {h, m, h, m}}},
        {"split_w_rho", "q", "1,1", "-1/2,1/2,1/2,1/2", "rho",
         {{m, h, h, m}, {h, m, m, h}, {h, h, m, m}, {h, h, m, m}}},
        {"split_z_phi", "q[sqrt2]", "1,1", "0,1/2,1/2,1/2s", "phi",
         {{"0", h, h, n2}, {h, "0", r2, m}, {h, n2, "0", h}, {r2, m, h, "0"}}},
        {"split_z_rho", "q[sqrt2]", "1,1", "0,1/2,1/2,1/2s", "rho",
         {{"0", h, h, n2}, {h, "0", n2, h}, {h, r2, "0", m}, {r2, h, m, "0"}}},
        {"split_q1_phi", "q[sqrt6]", "2,3", "1/2,1/2,1/2,1/6s", "phi",
         {{h, "1", "3/2", "-s"}, {h, h, "1/2s", "-3/2"}, {h, "-1/3s", h, "1"}, {"1/6s", m, h, h}}},
        {"split_q1_rho", "q[sqrt6]", "2,3", "1/2,1/2,1/2,1/6s", "rho",
         {{h, "1", "3/2", "-s"}, {h, h, "-1/2s", "3/2"}, {h, "1/3s", h, "-1"}, {"1/6s", h, m, h}}},
        {"split_q2_phi", "q[sqrt6]", "2,3", "-1/2,1/2,1/2,1/6s", "phi",
         {{m, "1", "3/2", "-s"}, {h, m, "1/2s", "-3/2"}, {h, "-1/3s", m, "1"}, {"1/6s", m, h, m}}},
        {"split_q2_rho", "q[sqrt6]", "2,3", "-1/2,1/2,1/2,1/6s", "rho",
         {{m, "1", "3/2", "-s"}, {h, m, "-1/2s", "3/2"}, {h, "1/3s", m, "-1"}, {"1/6s", h, m, m}}},
        {"split_q3_phi", "q[sqrt2]", "2,3", "1/2,1/2s,1/2,1/2", "phi",
         {{h, "s", "3/2", "-3"}, {r2, h, "3/2", "-3/2"}, {h, "-1", h, "s"}, {h, m, r2, h}}},
        {"split_q3_rho", "q[sqrt2]", "2,3", "1/2,1/2s,1/2,1/2", "rho",
         {{h, "s", "3/2", "-3"}, {r2, h, "-3/2", "3/2"}, {h, "1", h, "-s"}, {h, h, n2, h}}},
        {"split_q4_phi", "q[sqrt2]", "2,3", "-1/2,1/2s,1/2,1/2", "phi",
         {{m, "s", "3/2", "-3"}, {r2, m, "3/2", "-3/2"}, {h, "-1", m, "s"}, {h, m, r2, m}}},
        {"split_q4_rho", "q[sqrt2]", "2,3", "-1/2,1/2s,1/2,1/2", "rho",
         {{m, "s", "3/2", "-3"}, {r2, m, "-3/2", "3/2"}, {h, "1", m, "-s"}, {h, h, n2, m}}},
    };
}

} // namespace testsupport
