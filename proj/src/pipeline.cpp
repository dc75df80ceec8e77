#include "uht/pipeline.hpp"

namespace uht {

Outcome solve_drawing(const ParityDrawing& d, const std::set<VertexId>& w, bool embed, EmbedTrace* trace) {
  Outcome out;
  const bool simple = d.graph.is_simple();
  ParityDrawing work = d;
  if (!simple) {
    Reduction r = reduce(d, w, {.check_hypotheses = false});
    work = std::move(r.drawing);
    out.log = std::move(r.log);
  }
  out.verdict = decide_unified(work, w);
  if (!embed || !out.verdict.feasible) return out;
  EmbedResult e = embed_unified({apply_moves(work, out.verdict.moves), w}, trace);
  out.embedding = simple ? std::move(e) : reinsert_and_contract(e, *out.log);
  return out;
}

}  // namespace uht
