// Own entry point: the packaged benchmark_main archive carries LTO bytecode
// from a different compiler release.
#include <benchmark/benchmark.h>

BENCHMARK_MAIN();
