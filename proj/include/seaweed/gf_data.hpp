#pragma once

#include <string_view>

namespace seaweed {

// Exact copy of data/gf_families.json; a unit test asserts the two match.
inline constexpr std::string_view embedded_gf_json = R"json(
{
"version": 1,
"gfs": [
{"J":[1,2],"kind":"A","num":[[0,0,1],[1,0,-1]],"den":[[0,0,1],[1,0,-1],[1,1,-1],[2,1,-1],[2,2,-1],[3,2,1]]},
{"J":[1,2],"kind":"I","num":[[1,1,1],[2,1,1],[2,2,1],[3,2,-1]],"den":[[0,0,1],[1,0,-1]]},
{"J":[1,3],"kind":"A","num":[[0,0,1],[2,1,-1],[3,1,-1]],"den":[[0,0,1],[1,1,-1],[2,1,-1],[3,1,-1],[3,2,-1],[3,3,-1],[4,2,-1],[5,4,1],[6,4,1]]},
{"J":[1,3],"kind":"I","num":[[1,1,1],[3,2,1],[3,3,1],[4,2,1],[5,4,-1],[6,4,-1]],"den":[[0,0,1],[2,1,-1],[3,1,-1]]},
{"J":[1,4],"kind":"A","num":[[0,0,1],[2,0,-1],[3,1,-1],[4,0,-1],[6,0,1]],"den":[[0,0,1],[1,1,-1],[2,0,-1],[4,0,-1],[4,2,-1],[4,4,-1],[5,1,-1],[6,0,1],[6,4,1],[7,1,1],[7,5,1],[8,4,1],[10,4,-1]]},
{"J":[1,4],"kind":"I","num":[[1,1,1],[3,1,-1],[4,2,1],[4,4,1],[5,1,1],[6,4,-1],[7,1,-1],[7,5,-1],[8,4,-1],[10,4,1]],"den":[[0,0,1],[2,0,-1],[3,1,-1],[4,0,-1],[6,0,1]]},
{"J":[1,5],"kind":"A","num":[[0,0,1],[3,1,-1],[4,2,-1],[5,1,-2],[6,2,-1],[8,2,1],[10,2,1]],"den":[[0,0,1],[1,1,-1],[3,1,-1],[5,1,-2],[5,3,-1],[5,5,-1],[6,2,-1],[7,3,-1],[8,2,1],[8,6,1],[9,3,1],[9,7,1],[10,2,1],[10,6,2],[11,3,1],[11,7,1],[13,7,-1],[15,7,-1]]},
{"J":[1,5],"kind":"I","num":[[1,1,1],[4,2,-1],[5,3,1],[5,5,1],[7,3,1],[8,6,-1],[9,3,-1],[9,7,-1],[10,6,-2],[11,3,-1],[11,7,-1],[13,7,1],[15,7,1]],"den":[[0,0,1],[3,1,-1],[4,2,-1],[5,1,-2],[6,2,-1],[8,2,1],[10,2,1]]},
{"J":[1,7],"kind":"A","num":[[0,0,1],[4,1,-1],[5,2,-1],[6,3,-1],[7,1,-3],[8,2,-2],[9,3,-1],[11,2,2],[12,3,2],[14,2,3],[15,3,2],[18,3,-1],[21,3,-1]],"den":[[0,0,1],[1,1,-1],[4,1,-1],[7,1,-3],[7,4,-1],[7,7,-1],[8,2,-1],[9,3,-1],[10,4,-1],[11,2,2],[11,8,1],[12,3,2],[12,9,1],[13,4,2],[13,10,1],[14,2,3],[14,8,3],[15,3,3],[15,9,2],[16,4,2],[16,10,1],[18,3,-1],[18,9,-2],[19,4,-1],[19,10,-2],[21,3,-1],[21,9,-3],[22,4,-1],[22,10,-2],[25,10,1],[28,10,1]]},
{"J":[1,7],"kind":"I","num":[[1,1,1],[5,2,-1],[6,3,-1],[7,4,1],[7,7,1],[8,2,-1],[10,4,1],[11,8,-1],[12,9,-1],[13,4,-2],[13,10,-1],[14,8,-3],[15,3,-1],[15,9,-2],[16,4,-2],[16,10,-1],[18,9,2],[19,4,1],[19,10,2],[21,9,3],[22,4,1],[22,10,2],[25,10,-1],[28,10,-1]],"den":[[0,0,1],[4,1,-1],[5,2,-1],[6,3,-1],[7,1,-3],[8,2,-2],[9,3,-1],[11,2,2],[12,3,2],[14,2,3],[15,3,2],[18,3,-1],[21,3,-1]]},
{"J":[2,3],"kind":"A","num":[[0,0,1],[1,0,-1],[3,1,-1]],"den":[[0,0,1],[1,0,-1],[2,2,-1],[3,1,-1],[3,2,1],[3,3,-1],[4,3,1],[5,1,-2],[5,3,1],[6,4,1]]},
{"J":[2,3],"kind":"I","num":[[2,2,1],[3,2,-1],[3,3,1],[4,3,-1],[5,1,2],[5,3,-1],[6,4,-1]],"den":[[0,0,1],[1,0,-1],[3,1,-1]]},
{"J":[3,4],"kind":"A","num":[[0,0,1],[2,0,-1],[3,1,-1],[4,0,-1],[6,0,1]],"den":[[0,0,1],[2,0,-1],[3,1,-1],[3,3,-1],[4,0,-1],[4,4,-1],[5,3,1],[6,0,1],[6,4,2],[7,1,-2],[7,3,1],[7,5,1],[8,4,1],[9,1,2],[9,3,-1],[10,4,-1]]},
{"J":[3,4],"kind":"I","num":[[3,3,1],[4,4,1],[5,3,-1],[6,4,-2],[7,1,2],[7,3,-1],[7,5,-1],[8,4,-1],[9,1,-2],[9,3,1],[10,4,1]],"den":[[0,0,1],[2,0,-1],[3,1,-1],[4,0,-1],[6,0,1]]},
{"J":[1,2,3],"kind":"A","num":[[0,0,1],[1,0,-1],[2,1,-1],[3,1,-1]],"den":[[0,0,1],[1,0,-1],[1,1,-1],[2,1,-2],[2,2,-1],[3,1,-5],[3,3,-1],[4,2,-1],[4,3,2],[5,1,-2],[5,3,1],[5,4,1],[6,4,1]]},
{"J":[1,2,3],"kind":"I","num":[[1,1,1],[2,1,1],[2,2,1],[3,1,4],[3,3,1],[4,2,1],[4,3,-2],[5,1,2],[5,3,-1],[5,4,-1],[6,4,-1]],"den":[[0,0,1],[1,0,-1],[2,1,-1],[3,1,-1]]},
{"J":[1,3,4],"kind":"A","num":[[0,0,1],[1,0,-2],[2,0,2],[2,1,-1],[3,0,-2],[4,0,1]],"den":[[0,0,1],[1,0,-2],[1,1,-1],[2,0,2],[2,1,1],[3,0,-2],[3,1,-2],[3,2,-1],[3,3,-1],[4,0,1],[4,1,-2],[4,3,2],[4,4,-1],[5,1,5],[5,3,-2],[5,4,3],[6,1,-4],[6,3,2],[6,4,-2],[6,5,1],[7,1,2],[7,3,-1],[7,4,2],[8,4,-1]]},
{"J":[1,3,4],"kind":"I","num":[[1,1,1],[2,1,-2],[3,1,2],[3,2,1],[3,3,1],[4,1,2],[4,3,-2],[4,4,1],[5,1,-5],[5,3,2],[5,4,-3],[6,1,4],[6,3,-2],[6,4,2],[6,5,-1],[7,1,-2],[7,3,1],[7,4,-2],[8,4,1]],"den":[[0,0,1],[1,0,-2],[2,0,2],[2,1,-1],[3,0,-2],[4,0,1]]},
{"J":[1,6],"kind":"A","num":[[0,0,1],[3,0,-1],[4,0,-1],[5,0,-1],[6,0,-2],[7,0,-1],[9,0,2],[10,0,2],[12,0,1],[15,0,-1]],"den":[[0,0,1],[1,0,-1],[3,0,-1],[6,0,-4],[7,0,-1],[8,0,-1],[9,0,3],[10,0,3],[11,0,3],[12,0,3],[13,0,2],[15,0,-3],[16,0,-3],[18,0,-1],[21,0,1]]},
{"J":[1,6],"kind":"I","num":[[1,0,1],[4,0,-1],[5,0,-1],[6,0,2],[8,0,1],[9,0,-1],[10,0,-1],[11,0,-3],[12,0,-2],[13,0,-2],[15,0,2],[16,0,3],[18,0,1],[21,0,-1]],"den":[[0,0,1],[3,0,-1],[4,0,-1],[5,0,-1],[6,0,-2],[7,0,-1],[9,0,2],[10,0,2],[12,0,1],[15,0,-1]]}
],
"families": [
{"J":[1,2],"acyclic":true,"univariate":false},
{"J":[1,3],"acyclic":true,"univariate":false},
{"J":[1,4],"acyclic":true,"univariate":false},
{"J":[1,5],"acyclic":true,"univariate":false},
{"J":[1,7],"acyclic":true,"univariate":false},
{"J":[2,3],"acyclic":true,"univariate":false},
{"J":[3,4],"acyclic":true,"univariate":false},
{"J":[1,2,3],"acyclic":true,"univariate":false},
{"J":[1,3,4],"acyclic":true,"univariate":false},
{"J":[1,6],"acyclic":false,"univariate":true}
],
"recurrences": [
{"J":[1,2],"threshold":4,"terms":[[1,0,1]]},
{"J":[1,3],"threshold":7,"terms":[[2,1,1],[3,1,1]]},
{"J":[1,4],"threshold":11,"terms":[[2,0,1],[3,1,1],[4,0,1],[6,0,-1]]},
{"J":[1,5],"threshold":16,"terms":[[3,1,1],[4,2,1],[5,1,2],[6,2,1],[8,2,-1],[10,2,-1]]},
{"J":[1,7],"threshold":29,"terms":[[4,1,1],[5,2,1],[6,3,1],[7,1,3],[8,2,2],[9,3,1],[11,2,-2],[12,3,-2],[14,2,-3],[15,3,-2],[18,3,1],[21,3,1]]},
{"J":[2,3],"threshold":7,"terms":[[1,0,1],[3,1,1]]},
{"J":[3,4],"threshold":11,"terms":[[2,0,1],[3,1,1],[4,0,1],[6,0,-1]]},
{"J":[1,2,3],"threshold":7,"terms":[[1,0,1],[2,1,1],[3,1,1]]},
{"J":[1,3,4],"threshold":9,"terms":[[1,0,2],[2,0,-2],[2,1,1],[3,0,2],[4,0,-1]]},
{"J":[1,6],"threshold":22,"terms":[[3,0,1],[4,0,1],[5,0,1],[6,0,2],[7,0,1],[9,0,-2],[10,0,-2],[12,0,-1],[15,0,1]]}
],
"special_12n": {"mid":{"num":[[0,0,-2],[2,1,-2],[3,2,2],[3,3,3]],"den":[[0,0,1],[1,1,-1]]},"r":{"num":[[0,0,1],[1,1,1],[2,0,-1],[2,2,1],[3,1,1],[4,2,-1]],"den":[[0,0,1],[2,0,-1],[2,1,-1],[4,1,-1],[4,2,-1],[6,2,1]]}}
}
)json";

}  // namespace seaweed
