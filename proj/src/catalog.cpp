#include "tcg/catalog.hpp"

#include <algorithm>

#include "tcg/constructions.hpp"

namespace tcg {

std::vector<CatalogEntry> build_catalog(int max_order) {
  std::vector<std::string> specs;
  for (int order = 6; order <= 64; order += 2) specs.push_back("dihedral:" + std::to_string(order));
  specs.push_back("dihedral:128");
  specs.push_back("quaternion:8");
  specs.push_back("jgroup");
  specs.push_back("m3");
  specs.push_back("heisenberg:5");
  specs.push_back("heisenberg:7");
  specs.push_back("extraspecial:p=2,n=2,type=+");
  specs.push_back("extraspecial:p=2,n=2,type=-");
  specs.push_back("extraspecial:p=2,n=3,type=+");
  specs.push_back("extraspecial:p=2,n=3,type=-");
  specs.push_back("extraspecial:p=2,n=4,type=+");
  specs.push_back("extraspecial:p=2,n=4,type=-");
  specs.push_back("extraspecial:p=3,n=2,type=+");
  specs.push_back("central(dihedral:8,dihedral:8)");
  specs.push_back("central(dihedral:8,quaternion:8)");
  specs.push_back("direct(cyclic:2,dihedral:8)");
  specs.push_back("direct(cyclic:2,quaternion:8)");
  specs.push_back("direct(cyclic:3,m3)");
  specs.push_back("direct(cyclic:3,extraspecial:p=2,n=2,type=+)");
  specs.push_back("direct(cyclic:5,extraspecial:p=2,n=2,type=+)");
  specs.push_back("direct(cyclic:3,extraspecial:p=2,n=3,type=+)");
  specs.push_back("direct(cyclic:15,extraspecial:p=2,n=2,type=-)");
  specs.push_back("direct(cyclic:7,dihedral:8)");
  std::sort(specs.begin(), specs.end());

  std::vector<CatalogEntry> out;
  for (const std::string& spec : specs) {
    FiniteGroup g = build_from_spec(spec);
    if (g.order() > max_order) continue;
    out.push_back(CatalogEntry{spec, std::move(g)});
  }
  return out;
}

}  // namespace tcg
