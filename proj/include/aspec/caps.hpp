#pragma once

namespace aspec {

// Size caps for the exhaustive operations. The environment variable
// ALPHA_SPECTRA_MAX_N overrides the enumeration and poset caps; the
// canonical-labeling cap never drops below its default of 10.
int enumeration_cap(); // default 8
int poset_cap();       // default 6
int canonical_cap();   // default 10

} // namespace aspec
