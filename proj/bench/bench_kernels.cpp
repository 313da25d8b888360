// Copyright 2026 The tnvqc Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file bench_kernels.cpp
 * Serial reference vs OpenMP batch kernels on synthetic 28 x 28 inputs.
 * Run with OMP_NUM_THREADS set to compare thread counts.
 */

#include <numeric>

#include <benchmark/benchmark.h>

#include "tnvqc/kernels.hpp"

namespace {

using namespace tnvqc;

Dataset synthetic(std::size_t n) {
    Rng rng(5);
    Dataset d;
    d.class_map = {0, 1, 2};
    for (std::size_t i = 0; i < n; ++i) {
        d.labels.push_back(static_cast<std::uint32_t>(i % 3));
        for (std::size_t p = 0; p < d.dim; ++p) {
            d.images.push_back(rng.uniform());
        }
    }
    return d;
}

struct Fixture {
    Dataset data = synthetic(50);
    HybridModel model;
    std::vector<std::size_t> batch;

    explicit Fixture(ModelKind kind, std::size_t chi) : batch(data.size()) {
        Rng rng(1);
        ModelOptions opts;
        opts.chi = chi;
        model = make_model(kind, data.dim, 3, opts, rng, data.images);
        std::iota(batch.begin(), batch.end(), 0);
    }
};

template <bool Parallel> void BM_BatchGradient(benchmark::State &state) {
    Fixture f(static_cast<ModelKind>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    std::vector<double> grad(f.model.trainable_count());
    for (auto _ : state) {
        const double loss = Parallel ? kernels::batch_gradient_omp(f.model, f.data, f.batch, grad)
                                     : kernels::batch_gradient_serial(f.model, f.data, f.batch, grad);
        benchmark::DoNotOptimize(loss);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.batch.size()));
    state.counters["threads"] = Parallel ? kernels::max_threads() : 1;
}

template <bool Parallel> void BM_Predict(benchmark::State &state) {
    Fixture f(static_cast<ModelKind>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    for (auto _ : state) {
        auto pred = Parallel ? kernels::predict_omp(f.model, f.data)
                             : kernels::predict_serial(f.model, f.data);
        benchmark::DoNotOptimize(pred.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.data.size()));
    state.counters["threads"] = Parallel ? kernels::max_threads() : 1;
}

// args: model kind (0 mps, 1 pca-vqc, 2 mps-vqc), bond dimension
void kernel_args(benchmark::internal::Benchmark *b) {
    b->ArgNames({"kind", "chi"})->Args({2, 1})->Args({2, 2})->Args({2, 3})->Args({0, 2});
    b->Unit(benchmark::kMillisecond);
}

BENCHMARK(BM_BatchGradient<false>)->Name("batch_gradient/serial")->Apply(kernel_args);
BENCHMARK(BM_BatchGradient<true>)->Name("batch_gradient/omp")->Apply(kernel_args);
BENCHMARK(BM_Predict<false>)->Name("predict/serial")->Apply(kernel_args);
BENCHMARK(BM_Predict<true>)->Name("predict/omp")->Apply(kernel_args);

} // namespace

BENCHMARK_MAIN();
