/*
  catalog_data.cpp — reviewed transcription of the catalog tables.

  Data only; nothing here is computed. test_catalog freezes a checksum of
  this string so accidental edits are caught. Aliased entries ("q_of")
  point at the entry whose polynomial they share.
*/

#include "weyl/catalog.hpp"

namespace weyl {
namespace catalog {

const char* embedded_json() {
  return R"JSON({
  "entries": [
    {"id": 1,  "g": "B2", "q": [1,-1,0,-1,-1]},
    {"id": 2,  "g": "A2", "q": [1,-1,-1,-1]},
    {"id": 3,  "g": "B2", "q": [1,-1,-1,-1,-2]},
    {"id": 4,  "g": "B2", "q_of": 1},
    {"id": 5,  "g": "A2", "q_of": 2},
    {"id": 6,  "g": "B2", "q_of": 1},
    {"id": 7,  "g": "B2", "q_of": 3},
    {"id": 8,  "g": "A3", "q": [1,-1,-2,0,0,1,1]},
    {"id": 9,  "g": "A3", "q": [1,-1,-3,0,-1,1,3]},
    {"id": 10, "g": "B3", "q": [1,-1,0,-3,1,-1,0,0,1,2]},
    {"id": 11, "g": "B3", "q": [1,-1,0,-2,1,-1,0,0,1,1]},
    {"id": 12, "g": "B3", "q": [1,-1,-1,-3,0,0,-1,1,1,3]},
    {"id": 13, "g": "B3", "q_of": 11},
    {"id": 14, "g": "B3", "q_of": 11},
    {"id": 15, "g": "B3", "q_of": 10},
    {"id": 16, "g": "G2", "q": [1,-2,1,0,-1,0,1]},
    {"id": 17, "g": "B3", "q": [1,-1,0,-1,0,-2,1,0,1,1]},
    {"id": 18, "g": "G2", "q": [1,-2,0,1,-1,-1,2]},
    {"id": 19, "g": "B3", "q": [1,-1,0,-1,-1,-1,1,0,1,1]},
    {"id": 20, "g": "G2", "q": [1,-2,0,0,0,-2,3]},
    {"id": 21, "g": "D4", "q": [1,-1,-2,-1,0,2,1,2,3,-1,1,-1,-2]},
    {"id": 22, "g": "B4", "q": [1,-1,-1,-1,0,0,0,1,2,1,1,1,0,0,0,-1,-1]},
    {"id": 23, "g": "D4", "q": [1,-1,0,-1,-1,0,1,1,2,0,0,-1,-1]},
    {"id": 24, "g": "G2", "q": [1,-1,0,0,0,-1]},
    {"id": 25, "g": "B2", "q": [1,-1,0,-1]},
    {"id": 26, "g": "A2", "q": [1,-1,-1]},
    {"id": 27, "g": "B2", "q": [1,-1,-1,-1]},
    {"id": 28, "g": "G2", "q": [1,-1,0,-1,0,-1]},
    {"id": 29, "g": "G2", "q": [1,-1,-1,-1,-1,-1]},
    {"id": 30, "g": "G2", "q_of": 24},
    {"id": 31, "g": "B2", "q_of": 25},
    {"id": 32, "g": "B2", "q_of": 25},
    {"id": 33, "g": "G2", "q_of": 28},
    {"id": 34, "g": "G2", "q_of": 28},
    {"id": 35, "g": "B2", "q_of": 27},
    {"id": 36, "g": "A3", "q": [1,-1,-1,0,0,1]},
    {"id": 37, "g": "B3", "q": [1,-1,0,-1,0,0,0,0,1]},
    {"id": 38, "g": "B3", "q": [1,-1,-1,0,-1,0,1,0,1]},
    {"id": 39, "g": "B3", "q": [1,-1,-1,-1,0,0,0,1,1]},
    {"id": 40, "g": "B3", "q": [1,-1,0,-2,1,-1,1,0,1]},
    {"id": 41, "g": "B3", "q_of": 37},
    {"id": 42, "g": "B3", "q_of": 40},
    {"id": 43, "g": "B3", "q": [1,-1,0,0,-1,0,0,0,1]},
    {"id": 44, "g": "B3", "q": [1,-1,0,-1,0,-1,1,0,1]},
    {"id": 45, "g": "B3", "q_of": 44},
    {"id": 46, "g": "D5", "q": [1,0,-1,-1,-1,-1,-1,0,1,1,2,2,2,1,1,0,-1,-1,-1,-1]},
    {"id": 47, "g": "D5", "q": [1,-1,-1,0,-1,1,1,1,0,1,1,-1,0,-1,-1,-1,0,0,0,1]},
    {"id": 48, "g": "B5",
     "q": [1,-1,0,-2,1,0,1,-1,2,-1,1,0,1,1,-1,-1,0,0,-1,0,-1,0,0,0,1],
     "cartan": [[ 2,-1, 0, 0, 0, 0],
                [-1, 2,-1, 0, 0, 0],
                [ 0,-1, 2,-1,-1,-1],
                [ 0, 0,-1, 2, 0, 0],
                [ 0, 0,-1, 0, 2, 0],
                [ 0, 0,-1, 0, 0, 2]]}
  ],
  "h48": {
    "series": [1, 6, 20, 52, 117, 237, 445, 791, 1347, 2216, 3550, 5568,
               8582, 13044, 19604, 29189, 43129, 63332, 92518, 134572,
               195052, 281882, 406361, 584620, 839655, 1204232],
    "p_a4": [1, 4, 9, 15, 20, 22, 20, 15, 9, 4, 1],
    "r1_numerator_factors": [[1,1],[1,1],[1,1],[1,0,1],[1,-1,1],[1,0,0,0,1]],
    "r12_denominator": [1,0,-1,-2,-1,0,1,1,3,2,0,0,0,-1,-2,-2,-1,0,0,1,1],
    "r2_numerator": [1,1],
    "r3_numerator_factors": [[1,-1],[1,-1],[1,-1],[1,1],[1,1,1],[1,1,1],
                             [1,0,0,0,1],[1,1,1,1,1]],
    "r3_denominator": [1,0,-1,-2,-1,1,1,0,1,1,1,1,0,0,-1,-1],
    "r1_rep_counts": [1, 2, 3, 7, 12, 19, 32]
  }
})JSON";
}

}  // namespace catalog
}  // namespace weyl
