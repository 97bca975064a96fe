#include "orbifano/registry.hpp"

namespace orbifano {

// Ground-truth classification data: the 29 families with their invariants and
// model constructions, the 26 degeneration polygons, the binomial
// degeneration identities, and the directed-MMP runs of the eight roots.
const char* embedded_registry_json() {
  static const char* data = R"JSON(
{
  "families": [
    {"name":"S_{1,25/3}","series":"S","k":1,"d":"25/3","h0":9,"r":2,"moduli":-8,"fano_index":5,"pi1":"0",
     "construction":{"type":"ci","weights":[[1,1,3]],"bundles":[],"nef":[[1]]}},
    {"name":"B_{1,16/3}","series":"B","k":1,"d":"16/3","h0":6,"r":5,"moduli":-2,"fano_index":2,"pi1":"0",
     "construction":{"type":"ci","weights":[[1,1,1,3]],"bundles":[[4]],"nef":[[1]]}},
    {"name":"B_{2,8/3}","series":"B","k":2,"d":"8/3","h0":3,"r":8,"moduli":2,"fano_index":2,"pi1":"0",
     "construction":{"type":"ci","weights":[[1,1,3,3]],"bundles":[[6]],"nef":[[1]]}},

    {"name":"X_{1,22/3}","series":"X","k":1,"d":"22/3","h0":8,"r":3,"moduli":-6,"fano_index":1,"pi1":"0",
     "construction":{"type":"ci","weights":[[1,1,2,0],[0,1,3,1]],"bundles":[],"nef":[[1,1],[2,3]]}},
    {"name":"X_{1,19/3}","series":"X","k":1,"d":"19/3","h0":7,"r":4,"moduli":-4,"fano_index":1,"pi1":"0",
     "construction":{"type":"ci","weights":[[3,-2,1,0,0],[2,-1,0,1,0],[-1,1,0,0,1]],"bundles":[],
                     "nef":[[0,0,1],[0,1,1],[1,1,0],[3,2,0]]}},
    {"name":"X_{1,16/3}","series":"X","k":1,"d":"16/3","h0":6,"r":5,"moduli":-2,"fano_index":1,"pi1":"0",
     "construction":{"type":"ci","weights":[[1,1,0,0,0],[0,0,1,1,3]],"bundles":[[1,3]],"nef":[[1,0],[0,1]]}},
    {"name":"X_{1,13/3}","series":"X","k":1,"d":"13/3","h0":5,"r":6,"moduli":0,"fano_index":1,"pi1":"0",
     "construction":{"type":"ci","weights":[[1,1,3,1,0],[0,0,0,1,1]],"bundles":[[4,1]],"nef":[[1,0],[1,1]]}},
    {"name":"X_{1,10/3}","series":"X","k":1,"d":"10/3","h0":4,"r":7,"moduli":2,"fano_index":1,"pi1":"0",
     "construction":{"type":"ci","weights":[[1,1,2,1,0,0],[0,0,1,2,1,1]],"bundles":[[2,2],[2,2]],"nef":[[2,1],[1,2]]}},
    {"name":"X_{1,7/3}","series":"X","k":1,"d":"7/3","h0":3,"r":8,"moduli":4,"fano_index":1,"pi1":"0",
     "construction":{"type":"wg25",
       "description":"complete intersection of four degree-2 sections in the weighted Grassmannian wG(2,5) with weights (1/2,1/2,1/2,3/2,3/2), embedded in P(1,1,1,2,2,2,2,2,2,3)"}},
    {"name":"X_{1,4/3}","series":"X","k":1,"d":"4/3","h0":2,"r":9,"moduli":6,"fano_index":1,"pi1":"0",
     "construction":{"type":"ci","weights":[[1,1,2,2,3]],"bundles":[[4],[4]],"nef":[[1]]}},
    {"name":"X_{1,1/3}","series":"X","k":1,"d":"1/3","h0":1,"r":10,"moduli":8,"fano_index":1,"pi1":"0",
     "construction":{"type":"ci","weights":[[1,2,3,5]],"bundles":[[10]],"nef":[[1]]}},

    {"name":"X_{2,17/3}","series":"X","k":2,"d":"17/3","h0":6,"r":5,"moduli":-4,"fano_index":1,"pi1":"0",
     "construction":{"type":"ci","weights":[[1,1,2,3,0],[-1,0,1,3,1]],"bundles":[[4,2]],"nef":[[2,1],[1,1]]}},
    {"name":"X_{2,14/3}","series":"X","k":2,"d":"14/3","h0":5,"r":6,"moduli":-2,"fano_index":1,"pi1":"0",
     "construction":{"type":"ci","weights":[[1,1,0,0,-1],[0,1,1,3,1]],"bundles":[[0,4]],"nef":[[1,1],[0,1]]}},
    {"name":"X_{2,11/3}","series":"X","k":2,"d":"11/3","h0":4,"r":7,"moduli":0,"fano_index":1,"pi1":"0",
     "construction":{"type":"ci","weights":[[1,0,0,1,0,1],[0,1,0,0,1,1],[0,0,1,1,1,4]],"bundles":[[2,2,4]],
                     "nef":[[3,1,4],[1,3,4],[1,1,4]]}},
    {"name":"X_{2,8/3}","series":"X","k":2,"d":"8/3","h0":3,"r":8,"moduli":2,"fano_index":1,"pi1":"0",
     "construction":{"type":"ci","weights":[[1,1,1,1,0],[0,0,1,3,1]],"bundles":[[3,3]],"nef":[[1,1],[1,3]]}},
    {"name":"X_{2,5/3}","series":"X","k":2,"d":"5/3","h0":2,"r":9,"moduli":4,"fano_index":1,"pi1":"0",
     "construction":{"type":"ci","weights":[[1,1,2,1,0],[0,1,3,3,1]],"bundles":[[4,6]],"nef":[[2,3],[1,3]]}},
    {"name":"X_{2,2/3}","series":"X","k":2,"d":"2/3","h0":1,"r":10,"moduli":6,"fano_index":1,"pi1":"0",
     "construction":{"type":"ci","weights":[[1,2,2,3,3]],"bundles":[[4],[6]],"nef":[[1]]}},

    {"name":"X_{3,5}","series":"X","k":3,"d":"5","h0":5,"r":6,"moduli":-4,"fano_index":1,"pi1":"0",
     "construction":{"type":"ci","weights":[[1,0,0,1,0],[0,1,-1,1,0],[0,0,1,1,3]],"bundles":[],
                     "nef":[[1,1,1],[1,0,2],[0,0,1]]}},
    {"name":"X_{3,4}","series":"X","k":3,"d":"4","h0":4,"r":7,"moduli":-2,"fano_index":1,"pi1":"0",
     "construction":{"type":"ci","weights":[[1,-1,1,0,0,0],[-1,1,0,0,0,1],[2,1,0,1,0,0],[1,2,0,0,1,0]],"bundles":[],
                     "nef":[[0,0,1,1],[1,0,2,1],[0,1,1,2],[1,0,2,2],[0,1,2,2],[1,2,2,4],[2,1,4,2]]}},
    {"name":"X_{3,3}","series":"X","k":3,"d":"3","h0":3,"r":8,"moduli":0,"fano_index":1,"pi1":"0",
     "construction":{"type":"ci","weights":[[1,1,1,0,0],[0,0,1,1,3]],"bundles":[[2,3]],"nef":[[1,1],[0,1]]}},
    {"name":"X_{3,2}","series":"X","k":3,"d":"2","h0":2,"r":9,"moduli":2,"fano_index":1,"pi1":"0",
     "construction":{"type":"ci","weights":[[1,3,2,0,-1],[0,0,1,1,1]],"bundles":[[4,2]],"nef":[[2,1],[0,1]]}},
    {"name":"X_{3,1}","series":"X","k":3,"d":"1","h0":1,"r":10,"moduli":4,"fano_index":1,"pi1":"0",
     "construction":{"type":"ci","weights":[[1,0,0,2,1,1],[0,1,0,1,2,1],[0,0,1,1,1,2]],"bundles":[[4,4,4]],
                     "nef":[[2,1,1],[1,2,1],[1,1,2]]}},

    {"name":"X_{4,7/3}","series":"X","k":4,"d":"7/3","h0":2,"r":9,"moduli":0,"fano_index":1,"pi1":"0",
     "construction":{"type":"ci","weights":[[1,0,0,-1,-1],[0,3,3,2,1]],"bundles":[[0,6]],"nef":[[0,1],[-1,2]]}},
    {"name":"X_{4,4/3}","series":"X","k":4,"d":"4/3","h0":1,"r":10,"moduli":2,"fano_index":1,"pi1":"0",
     "construction":{"type":"ci",
       "weights":[[1,0,0,0,2,1,1,1],[0,1,0,0,1,2,1,1],[0,0,1,0,1,1,2,1],[0,0,0,1,1,1,1,2]],
       "bundles":[[2,2,3,3],[3,3,2,2]],"nef":[[2,1,1,1],[1,2,1,1],[1,1,2,1],[1,1,1,2]]}},
    {"name":"X_{4,1/3}","series":"X","k":4,"d":"1/3","h0":0,"r":11,"moduli":4,"fano_index":1,"pi1":"0",
     "construction":{"type":"ci","weights":[[2,2,3,3,3]],"bundles":[[6],[6]],"nef":[[1]]}},

    {"name":"X_{5,5/3}","series":"X","k":5,"d":"5/3","h0":1,"r":10,"moduli":0,"fano_index":1,"pi1":"0",
     "construction":{"type":"pfaffian",
       "description":"degeneracy locus of an antisymmetric map of rank-5 split bundles on a simplicial toric 5-fold",
       "vars":["y1","y2","y3","y4","y5","x1","x2","x3","x4","x5"],
       "weights":[[1,0,0,0,0,2,1,1,1,1],[0,1,0,0,0,1,2,1,1,1],[0,0,1,0,0,1,1,2,1,1],
                  [0,0,0,1,0,1,1,1,2,1],[0,0,0,0,1,1,1,1,1,2]],
       "omega":[6,6,6,6,6],
       "nef":[[2,1,1,1,1],[1,2,1,1,1],[1,1,2,1,1],[1,1,1,2,1],[1,1,1,1,2]],
       "bundles":[[2,2,3,2,3],[2,3,2,2,3],[2,3,2,3,2],[3,2,2,3,2],[3,2,3,2,2]],
       "line":[-6,-6,-6,-6,-6],
       "matrix_upper":["y1^2 y2 y3 y4^2","x1","x2","y1 y2^2 y4^2 y5",
                       "y1^2 y3^2 y4 y5","x3","x4","y1 y2 y3^2 y5^2","x5","y2^2 y3 y4 y5^2"],
       "equations":["-x3 x5 + x4 y1 y2 y3^2 y5^2 + y1^2 y2^2 y3^3 y4^2 y5^3",
                    "-x5 x2 + x1 y2^2 y3 y4 y5^2 + y1^2 y2^3 y3^2 y4^2 y5^3",
                    "-x2 x4 + x3 y1 y2^2 y4^2 y5 + y1^2 y2^3 y3^2 y4^3 y5^2",
                    "-x4 x1 + x5 y1^2 y2 y3 y4^2 + y1^3 y2^2 y3^2 y4^3 y5^2",
                    "-x1 x3 + x2 y1^2 y3^2 y4 y5 + y1^3 y2^2 y3^3 y4^2 y5^2"]}},
    {"name":"X_{5,2/3}","series":"X","k":5,"d":"2/3","h0":0,"r":11,"moduli":2,"fano_index":1,"pi1":"0",
     "construction":{"type":"nonsimplicial",
       "description":"codimension-2 complete intersection in the non-simplicial toric 4-fold spanned by the pairwise sums of five balanced vectors",
       "vars":["y01","y02","y03","y04","y12","y13","y14","y23","y24","y34"],
       "rays":[[0,-1,-1,-1],[-1,0,-1,-1],[-1,-1,0,-1],[-1,-1,-1,0],[1,1,0,0],
               [1,0,1,0],[1,0,0,1],[0,1,1,0],[0,1,0,1],[0,0,1,1]],
       "x_monomials":["y01 y02 y03 y04","y01 y12 y13 y14","y02 y12 y23 y24",
                      "y03 y13 y23 y34","y04 y14 y24 y34"],
       "z_monomials":["y12 y13 y14 y23 y24 y34","y02 y03 y04 y23 y24 y34",
                      "y01 y03 y04 y13 y14 y34","y01 y02 y04 y12 y14 y24",
                      "y01 y02 y03 y12 y13 y23"],
       "chart_vars":["y12","y13","y14","y23","y24","y34"],
       "chart_z":["y12 y13 y14","y12 y14 y24","y12 y23 y24","y12 y13 y23",
                  "y13 y14 y34","y14 y24 y34","y23 y24 y34","y13 y23 y34"],
       "cube_relations":[[1,6,2,5],[1,3,2,4],[1,8,4,5],[3,6,2,7],[3,8,4,7],[6,8,5,7]]}},

    {"name":"X_{6,2}","series":"X","k":6,"d":"2","h0":1,"r":10,"moduli":-2,"fano_index":1,"pi1":"Z/3",
     "construction":{"type":"quotient","polygon_id":9,
       "description":"order-3 quotient of the degree-6 hexagonal toric surface; equivalently the face fan of polygon 9",
       "weights":[[1,-1,1,0,0,0],[1,0,0,1,0,0],[0,1,0,0,1,0],[-1,1,0,0,0,1]],
       "bundles":[],
       "nef":[[1,1,0,0],[0,1,1,0],[0,0,1,1],[1,1,1,0],[0,1,1,1]]}},
    {"name":"X_{6,1}","series":"X","k":6,"d":"1","h0":0,"r":11,"moduli":0,"fano_index":1,"pi1":"Z/3",
     "construction":{"type":"quotient","polygon_id":0,
       "description":"order-3 quotient of a smooth cubic surface: the quotient of P^3 by the action with weights (1/3,1/3,2/3,2/3) restricted to an invariant cubic"}}
  ],
  "polygons": [
    {"id":1,"vertices":[[7,5],[-3,5],[-3,-5]],"n":10,"k":1,"deforms_to":"X_{1,1/3}"},
    {"id":2,"vertices":[[3,2],[-3,2],[-3,-2],[3,-2]],"n":8,"k":2,"deforms_to":"X_{2,2/3}"},
    {"id":3,"vertices":[[3,1],[3,2],[-1,2],[-2,1],[-2,-3],[-1,-3]],"n":6,"k":3,"deforms_to":"X_{3,1}"},
    {"id":4,"vertices":[[3,2],[-1,2],[-2,1],[-2,-3]],"n":9,"k":1,"deforms_to":"X_{1,4/3}"},
    {"id":5,"vertices":[[2,1],[1,2],[-1,2],[-2,1],[-2,-1],[-1,-2],[1,-2],[2,-1]],"n":4,"k":4,"deforms_to":"X_{4,4/3}"},
    {"id":6,"vertices":[[3,2],[-1,2],[-2,1],[-2,-1],[-1,-2]],"n":7,"k":2,"deforms_to":"X_{2,5/3}"},
    {"id":7,"vertices":[[2,1],[1,2],[-1,2],[-2,1],[-2,-1],[-1,-2],[1,-1]],"n":2,"k":5,"deforms_to":"X_{5,5/3}"},
    {"id":8,"vertices":[[2,1],[1,2],[-1,2],[-2,1],[-2,-1],[-1,-2]],"n":5,"k":3,"deforms_to":"X_{3,2}"},
    {"id":9,"vertices":[[1,1],[-1,2],[-2,1],[-1,-1],[1,-2],[2,-1]],"n":0,"k":6,"deforms_to":"X_{6,2}"},
    {"id":10,"vertices":[[1,1],[-1,2],[-1,-2],[1,-2]],"n":8,"k":1,"deforms_to":"X_{1,7/3}"},
    {"id":11,"vertices":[[1,1],[-1,2],[-2,1],[-1,-1],[2,-1]],"n":3,"k":4,"deforms_to":"X_{4,7/3}"},
    {"id":12,"vertices":[[3,1],[-3,1],[0,-1]],"n":6,"k":2,"deforms_to":"B_{2,8/3}"},
    {"id":13,"vertices":[[1,1],[-1,2],[-1,-1],[2,-1]],"n":6,"k":2,"deforms_to":"X_{2,8/3}"},
    {"id":14,"vertices":[[1,1],[-1,2],[-2,1],[-1,-1],[1,-1]],"n":4,"k":3,"deforms_to":"X_{3,3}"},
    {"id":15,"vertices":[[1,1],[-1,2],[-1,-1],[1,-1]],"n":7,"k":1,"deforms_to":"X_{1,10/3}"},
    {"id":16,"vertices":[[1,1],[-1,2],[-1,0],[0,-1],[2,-1]],"n":5,"k":2,"deforms_to":"X_{2,11/3}"},
    {"id":17,"vertices":[[1,0],[1,1],[-1,2],[-2,1],[-1,-1],[0,-1]],"n":3,"k":3,"deforms_to":"X_{3,4}"},
    {"id":18,"vertices":[[1,0],[0,1],[-1,1],[-1,-3]],"n":6,"k":1,"deforms_to":"X_{1,13/3}"},
    {"id":19,"vertices":[[1,1],[-1,2],[-1,1],[0,-1],[2,-1]],"n":4,"k":2,"deforms_to":"X_{2,14/3}"},
    {"id":20,"vertices":[[1,1],[-1,2],[-2,1],[-1,-1],[0,-1]],"n":2,"k":3,"deforms_to":"X_{3,5}"},
    {"id":21,"vertices":[[1,1],[-1,2],[-1,-2]],"n":5,"k":1,"deforms_to":"B_{1,16/3}"},
    {"id":22,"vertices":[[1,1],[-1,2],[-1,-1],[0,-1]],"n":5,"k":1,"deforms_to":"X_{1,16/3}"},
    {"id":23,"vertices":[[1,1],[-1,2],[0,-1],[2,-1]],"n":3,"k":2,"deforms_to":"X_{2,17/3}"},
    {"id":24,"vertices":[[0,1],[-1,2],[-2,1],[-1,0],[1,-1]],"n":4,"k":1,"deforms_to":"X_{1,19/3}"},
    {"id":25,"vertices":[[0,1],[-1,2],[-2,1],[1,-1]],"n":3,"k":1,"deforms_to":"X_{1,22/3}"},
    {"id":26,"vertices":[[-1,2],[-2,1],[1,-1]],"n":2,"k":1,"deforms_to":"S_{1,25/3}"}
  ],
  "binomial_degenerations": [
    {"polygon_id":21,"family":"B_{1,16/3}",
     "source_vars":["x0","x1","x2","y"],"target_vars":["u","v","w"],
     "substitution":["u^4","u v","w","v^4"],"relation":"y x0 - x1^4"},
    {"polygon_id":12,"family":"B_{2,8/3}",
     "source_vars":["x0","x1","y0","y1"],"target_vars":["u0","u1","v"],
     "substitution":["v","u0 u1","u0^6","u1^6"],"relation":"y0 y1 - x1^6"},
    {"polygon_id":13,"family":"X_{2,8/3}",
     "source_vars":["s0","s1","x0","y","x1"],"target_vars":["u0","u1","v0","v1"],
     "substitution":["u0^3","u1^3","u0 u1 v0","v0^3","v1"],"relation":"s0 s1 y - x0^3"},
    {"polygon_id":22,"family":"X_{1,16/3}",
     "source_vars":["s0","s1","x0","x1","y"],"target_vars":["u0","u1","v0","v1"],
     "substitution":["u0^3","u1","v0","u0 v1","u1 v1^3"],"relation":"s0 y - s1 x1^3"}
  ],
  "mmp": [
    {"family":"B_{1,16/3}",
     "expected":[{"path":["E4","E2"],"terminal":"C:"}],
     "prunes":[]},
    {"family":"S_{1,25/3}",
     "expected":[{"path":[],"terminal":"D5"}],
     "prunes":[]},
    {"family":"B_{2,8/3}",
     "expected":[{"path":["E4","E2","E4","E2"],"terminal":"C:"}],
     "prunes":[{"path":["E4","E4"],
       "citation":"k=2 directed run alternates: the A1 point created by each E4 step is contracted next"}]},
    {"family":"X_{2,17/3}",
     "expected":[{"path":["E4","E2"],"terminal":"D5"}],
     "prunes":[{"path":["E4","E5"],
       "citation":"k=2 tree: the directed run for this surface ends at P(1,1,3), not at the plane"}]},
    {"family":"X_{3,5}",
     "expected":[{"path":["E4","E5"],"terminal":"D5"}],
     "prunes":[{"path":["E6"],
       "citation":"k=3 tree: the first contraction is of type E4"},
      {"path":["E4","E6"],
       "citation":"k=3 tree: the run continues with the type-E5 contraction onto P(1,1,3)"}]},
    {"family":"X_{4,7/3}",
     "expected":[{"path":["E4","E2","E4","E5"],"terminal":"D5"}],
     "prunes":[{"path":["E4","E4"],
       "citation":"k=4 tree, cases 2 and 3: two consecutive E4 steps force an earlier contraction and do not occur"},
      {"path":["E4","E2","E6"],
       "citation":"k=4 tree: after (E4,E2) the k=3 run (E4,E5) applies"},
      {"path":["E4","E2","E4","E6"],
       "citation":"k=4 tree, case 1: the final contraction is of type E5"}]},
    {"family":"X_{5,5/3}",
     "expected":[{"path":["E4","E4","E5","E5"],"terminal":"D5"}],
     "prunes":[{"path":["E4","E5"],
       "citation":"k=5 tree: the directed run performs the second type-E4 contraction first"},
      {"path":["E4","E4","E6"],
       "citation":"k=5 tree: the third step is of type E5"},
      {"path":["E4","E4","E5","E6"],
       "citation":"k=5 tree: the final contraction is of type E5, onto P(1,1,3)"}]},
    {"family":"X_{6,2}",
     "expected":[{"path":["E6","E6"],"terminal":"C:C2,C2"},
                 {"path":["E6","E6","E6"],"terminal":"D4"}],
     "prunes":[]}
  ]
}
)JSON";
  return data;
}

}  // namespace orbifano
