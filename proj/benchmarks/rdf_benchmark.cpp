#include <benchmark/benchmark.h>

#include <sstream>
#include <string>

#include "dsfuse/engine.hpp"
#include "dsfuse/rdf/parser.hpp"
#include "dsfuse/rdf/serializer.hpp"

namespace {

// A synthetic scene: `instances` uncertain concepts, two sources each,
// three assignments per source pair roughly like the shipped example.
std::string make_scene(int instances) {
  std::ostringstream out;
  out << "@prefix ds: <http://dsfuse.org/ds#> .\n"
         "@prefix ex: <http://example.org/bench#> .\n";
  for (int i = 0; i < instances; ++i) {
    out << "ex:thing" << i << " a ds:UncertainConcept ;\n"
        << "    ds:hasAssignment ex:m" << i << "a, ex:m" << i << "b, ex:m" << i
        << "c .\n"
        << "ex:m" << i << "a ds:assignedBy ex:s1 ; ds:isEither ex:cat" << i
        << " ; ds:massValue 0.4 .\n"
        << "ex:m" << i << "b ds:assignedBy ex:s1 ; ds:isEither ex:cat" << i
        << ", ex:dog" << i << " ; ds:massValue 0.6 .\n"
        << "ex:m" << i << "c ds:assignedBy ex:s2 ; ds:isTotalIgnorance true ;"
        << " ds:massValue 1.0 .\n";
  }
  return out.str();
}

void BM_ParseTurtle(benchmark::State& state) {
  const std::string text = make_scene(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto g = dsfuse::rdf::parse(text, dsfuse::rdf::Format::kTurtle);
    benchmark::DoNotOptimize(g);
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_ParseTurtle)->Arg(10)->Arg(100)->Arg(1000);

void BM_SerializeNTriples(benchmark::State& state) {
  const auto g = dsfuse::rdf::parse(make_scene(static_cast<int>(state.range(0))),
                                    dsfuse::rdf::Format::kTurtle);
  for (auto _ : state) {
    auto text = dsfuse::rdf::serialize(g, dsfuse::rdf::Format::kNTriples);
    benchmark::DoNotOptimize(text);
  }
}
BENCHMARK(BM_SerializeNTriples)->Arg(10)->Arg(100)->Arg(1000);

void BM_SerializeTurtle(benchmark::State& state) {
  const auto g = dsfuse::rdf::parse(make_scene(static_cast<int>(state.range(0))),
                                    dsfuse::rdf::Format::kTurtle);
  for (auto _ : state) {
    auto text = dsfuse::rdf::serialize(g, dsfuse::rdf::Format::kTurtle);
    benchmark::DoNotOptimize(text);
  }
}
BENCHMARK(BM_SerializeTurtle)->Arg(10)->Arg(100)->Arg(1000);

void BM_FuseGraph(benchmark::State& state) {
  const auto g = dsfuse::rdf::parse(make_scene(static_cast<int>(state.range(0))),
                                    dsfuse::rdf::Format::kTurtle);
  const dsfuse::FusionConfig config;
  for (auto _ : state) {
    auto [annotated, report] = dsfuse::fuse_graph(g, config);
    benchmark::DoNotOptimize(annotated);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_FuseGraph)->Arg(1)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
