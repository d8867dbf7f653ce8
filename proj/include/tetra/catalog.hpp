#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tetra/algebra.hpp"
#include "tetra/eval.hpp"

namespace tetra::catalog {

/// Built-in axiom systems, sentences stored as written in the literature
/// (including redundant and misprinted ones).
///
///   MOISIL_A         A1-A8, three-valued Lukasiewicz algebras (dm, nabla)
///   TMA              A2-A7, 4-valued modal algebras
///   DE_MORGAN        A2-A5
///   VARLET           V1-V7 as printed (pc, dpc)
///   VARLET_ID        V1-V6 plus the identity replacing V7
///   VARLET_STONE     VARLET with V2 read as the Stone law pc(x&y) = pc x | pc y
///   VARLET_STONE_ID  VARLET_STONE with the V7 replacement identity
///   DOUBLE_STONE     pc x | pc pc x = 1, dpc x & dpc dpc x = 0
///   B_SYS            B1-B10 (sneg, wneg)
///   B_DERIVED_1      B11-B32
///   B_DERIVED_2      B33-B42 (B33 split into B33a/B33b), also uses dm
///   D_FORMS          D1-D3 linking dm, nabla with sneg, wneg
///   T_SYS            T1-T2 (dm, sneg)
///   MDMP             x & pc x = 0, maximality of pc, H1 (dm, pc)
///   DM_T             DE_MORGAN + T_SYS
///   DM_MDMP          DE_MORGAN + MDMP
const AxiomSystem& get_system(std::string_view name);
bool has_system(std::string_view name);
std::vector<std::string> system_names();

struct NamedModel {
  std::string name;
  FiniteAlgebra algebra;
  std::string provenance;
};

/// M4_DIAMOND (also called T4), C4_CHAIN, T2, T3.
const NamedModel& get_model(std::string_view name);
bool has_model(std::string_view name);
std::vector<std::string> model_names();

/// Source text of every sentence in a system, "LABEL: sentence" per line.
std::string format_system(const AxiomSystem& system);

}  // namespace tetra::catalog
