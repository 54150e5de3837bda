#pragma once
// Problem documents shared by the unit, acceptance and CLI tests.

#include <string>
#include <vector>

namespace fixtures {

struct Fixture {
  std::string name;
  std::string document;  // JSON, without epsilons or sections
};

inline const std::vector<Fixture>& suite() {
  static const std::vector<Fixture> all{
      {"half_plane",
       R"({"class":"polynomial","n":2,"terms":[{"coeff":1,"exp":[1,0]}],"rho":"1/2"})"},
      {"quarter_disk",
       R"({"class":"polynomial","n":2,"terms":[{"coeff":1,"exp":[2,0]},{"coeff":1,"exp":[0,2]}],"rho":"1/4"})"},
      // ((x-1/4)^2+(y-1/2)^2)((x-3/4)^2+(y-1/2)^2), expanded.
      {"two_disks",
       R"({"class":"polynomial","n":2,"terms":[
          {"coeff":1,"exp":[4,0]},{"coeff":-2,"exp":[3,0]},{"coeff":2,"exp":[2,2]},{"coeff":-2,"exp":[2,1]},
          {"coeff":"15/8","exp":[2,0]},{"coeff":-2,"exp":[1,2]},{"coeff":2,"exp":[1,1]},{"coeff":"-7/8","exp":[1,0]},
          {"coeff":1,"exp":[0,4]},{"coeff":-2,"exp":[0,3]},{"coeff":"17/8","exp":[0,2]},{"coeff":"-9/8","exp":[0,1]},
          {"coeff":"65/256","exp":[0,0]}],"rho":"1/1024"})"},
      // (x^2+y^2-5/32)^2 <= 9/1024 is the annulus 1/16 <= x^2+y^2 <= 1/4.
      {"annulus",
       R"({"class":"polynomial","n":2,"terms":[
          {"coeff":1,"exp":[4,0]},{"coeff":2,"exp":[2,2]},{"coeff":1,"exp":[0,4]},
          {"coeff":"-5/16","exp":[2,0]},{"coeff":"-5/16","exp":[0,2]},{"coeff":"25/1024","exp":[0,0]}],"rho":"9/1024"})"},
      {"quartic",
       R"({"class":"polynomial","n":2,"terms":[
          {"coeff":1,"exp":[4,0]},{"coeff":-1,"exp":[2,0]},{"coeff":1,"exp":[0,4]},{"coeff":-1,"exp":[0,2]},
          {"coeff":"1/2","exp":[0,0]}],"rho":"1/4"})"},
      {"laurent",
       R"({"class":"laurent","n":2,"terms":[
          {"coeff":1,"exp":[1,0]},{"coeff":1,"exp":[-1,0]},{"coeff":1,"exp":[0,1]},{"coeff":1,"exp":[0,-1]}],
          "rho":"9/2"})"},
      // |1 - 2x e^{3iy}|^2
      {"quasi_k2",
       R"({"class":"quasipoly","n":2,"terms":[
          {"poly":[{"coeff":1,"exp":[0,0]}],"a":[0,0],"b":[0,0]},
          {"poly":[{"coeff":-2,"exp":[1,0]}],"a":[0,0],"b":[0,3]}],"rho":"1/4"})"},
      // |e^{2t} - 3e^t + 2|, zeros at 0 and ln 2.
      {"real_expo",
       R"({"class":"expopoly","n":1,"terms":[{"c":1,"lambda":2},{"c":-3,"lambda":1},{"c":2,"lambda":0}],"rho":"1/20"})"},
      {"ball_3d",
       R"({"class":"polynomial","n":3,"terms":[{"coeff":1,"exp":[2,0,0]},{"coeff":1,"exp":[0,2,0]},{"coeff":1,"exp":[0,0,2]}],
          "rho":"1/4"})"},
  };
  return all;
}

}  // namespace fixtures
