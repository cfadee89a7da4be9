#include "brsc/report.hpp"

#include "brsc/errors.hpp"
#include "brsc/flats.hpp"
#include "brsc/matroid.hpp"
#include "brsc/structure.hpp"
#include "brsc/tbrsc.hpp"
#include "brsc/topology.hpp"

namespace brsc {

ComplexReport analyze_complex(const SimplicialComplex& s, bool with_topology,
                              int max_vertices) {
  ComplexReport r;
  r.dim = s.dim();
  r.rank = s.rank();
  r.is_simple = is_simple(s);
  r.is_paving = is_paving(s);
  r.is_pure = is_pure(s);
  r.is_connected = is_connected(s);
  r.is_matroid = is_matroid(s, max_vertices);
  r.is_near_matroid = is_near_matroid(s, max_vertices).holds;

  const BrCheck br = is_boolean_representable(s, max_vertices);
  r.is_br = br.holds;
  r.br_witness = br.witness;
  const TbCheck tb = is_tbrsc(s, max_vertices);
  r.is_tbrsc = tb.holds;
  r.tbrsc_witness = tb.witness;

  if (with_topology) {
    if (r.is_tbrsc) {
      try {
        r.pi1 = pi1_rank(s, max_vertices);
      } catch (const UsageError&) {
        // Undefined for disconnected complexes; leave empty.
      }
    }
    r.betti_numbers = betti(s, max_vertices);
  }
  return r;
}

}  // namespace brsc
