#include <iostream>

#include "wps/wps.hpp"

int main() {
  const auto f4 = wps::parse_field("4");
  const auto ws = wps::WeightSystem::parse("2,3,5");
  const auto pts = wps::enumerate_points(ws, f4);
  std::cout << "P(2,3,5) over F_4 has " << pts.size() << " points\n";

  const auto f5 = wps::parse_field("5");
  const auto plane = wps::WeightSystem::parse("1,1,2");
  const auto r = wps::eq_oracle(plane, 2, f5);
  std::cout << "max zeros of a degree 2 form on P(1,1,2) over F_5: " << r.value << "\n";
  std::cout << "  attained by " << wps::to_string(*r.witness) << "\n";

  const auto f19 = wps::parse_field("19");
  const auto rows = wps::comparison_table(f19, 16, wps::plane_table_entries());
  std::cout << wps::table_csv(rows);

  const auto code = wps::build_code(f5, wps::CodeKind::WPRM, 2, 2, plane);
  const auto p = wps::code_parameters(f5, code, wps::DminMethod::Exhaustive);
  std::cout << "WPRM_5(2,2;(1,1,2)) = [" << p.n << ", " << p.k << ", " << p.d_min << "]\n";
}
