#pragma once

#include "ulam/auxseq.hpp"
#include "ulam/distribution.hpp"
#include "ulam/seqgen.hpp"
#include "ulam/sequence.hpp"

namespace ulam {

// Materializes any SequenceSpec.
inline SequenceData generate(const SequenceSpec& spec, const GenerationOptions& options = {}) {
  spec.validate();
  switch (spec.family) {
    case Family::ulam:
      return ulam_terms(spec, options);
    case Family::stern:
      return stern_terms(*spec.count);
    case Family::macmahon:
      return run_sum_excluded_terms(RunSumRule::unbounded(), *spec.count);
    case Family::lagarias:
      return run_sum_excluded_terms(RunSumRule::up_to_three(), *spec.count);
    case Family::synthetic: {
      if (!spec.count) throw ArgumentError("synthetic sequences are generated by count");
      return synth_sequence(*spec.alpha_star, *spec.count);
    }
  }
  throw ArgumentError("unknown family");
}

}  // namespace ulam
