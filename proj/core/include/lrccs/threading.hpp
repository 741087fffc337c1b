#ifndef LRCCS_THREADING_HPP
#define LRCCS_THREADING_HPP

namespace lrccs {

/// Number of worker threads for column-parallel loops. Respects the
/// LRCCS_THREADS environment variable (capped at hardware concurrency);
/// defaults to hardware concurrency. Results never depend on this value:
/// all reductions run over a fixed topology.
int effective_threads();

/// Override the thread cap programmatically (0 restores the default).
void set_thread_cap(int threads);

}  // namespace lrccs

#endif  // LRCCS_THREADING_HPP
