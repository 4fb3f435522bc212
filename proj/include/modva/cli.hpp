#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modva {

// Front-end dispatcher for the `modva` tool; `args` are the tokens after the
// program name.  Reports go to `out`, diagnostics to `err`.  Exit code 0 on
// success, 1 when a verification command found failures (the report is still
// emitted), 2 on invalid input or configuration.
//
// Commands:
//   gram         per-degree Gram matrices, ranks and radicals of the form
//   dims         graded dimensions of the quotient by the form radical
//   formspace    dimension of the space of invariant forms + stabilization
//   normal-form  straighten a divided-power expression into the PBW basis
//   verify       run one verification suite or the whole catalog
//   dual-check   contragredient pairing report over the truncation window
//
// Output format is chosen with --format text|json|csv; text renders residues
// symmetrically in (-p/2, p/2], json and csv keep canonical [0, p).  Output
// is byte-identical for identical configurations, including under --workers
// parallelism (MODVA_WORKERS supplies the default worker count).
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modva
