#include "lefschetz/census.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

#include <nlohmann/json.hpp>

#include "lefschetz/combinat.hpp"
#include "lefschetz/verify.hpp"

namespace lefschetz {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json witness_json(const std::optional<Witness>& w) {
    if (!w) return nullptr;
    ordered_json j;
    if (const auto* d = std::get_if<DegreeWitness>(&*w)) {
        j["kind"] = "degree";
        j["degree"] = d->degree;
        j["power"] = d->power;
    } else if (const auto* p = std::get_if<PrimeWitness>(&*w)) {
        j["kind"] = "prime";
        j["prime"] = p->prime;
        j["exponent"] = p->exponent;
    } else if (const auto* s = std::get_if<SyzygyWitness>(&*w)) {
        j["kind"] = "syzygy";
        j["degree"] = s->degree;
        j["summary"] = s->description;
    } else if (const auto* g = std::get_if<GapWitness>(&*w)) {
        j["kind"] = "syzygy";
        j["gap_scale"] = g->scale;
        j["gap_point"] = g->point;
    } else if (const auto* t = std::get_if<TheoremWitness>(&*w)) {
        j["kind"] = "theorem";
        j["id"] = t->id;
    }
    return j;
}

}  // namespace

std::string to_jsonl(const CensusRecord& r) {
    ordered_json j;
    j["degrees"] = r.degrees;
    j["normalized"] = r.normalized;
    j["char"] = r.characteristic;
    j["property"] = to_string(r.property);
    j["status"] = to_string(r.status);
    j["method"] = r.method;
    j["witness"] = witness_json(r.witness);
    j["runtime_micros"] = r.runtime_micros;
    return j.dump();
}

CensusRecord decide_record(const std::vector<int>& degrees, Characteristic ch,
                           Property property, const ClassifyOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    const DegreeTuple d = DegreeTuple::normalize(degrees);
    const Classified c = property == Property::wlp ? classify_wlp(d, ch, opt)
                                                   : classify_slp(d, ch, opt);
    const auto stop = std::chrono::steady_clock::now();

    CensusRecord r;
    r.degrees = degrees;
    r.normalized = d.degrees();
    r.characteristic = ch.value();
    r.property = property;
    r.status = c.verdict.status;
    r.method = c.verdict.method;
    r.witness = c.verdict.witness;
    r.runtime_micros =
        std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
    return r;
}

int default_jobs() {
    if (const char* env = std::getenv("LEFSCHETZ_JOBS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

std::vector<CensusRecord> run_census(const CensusRequest& request) {
    struct Task {
        std::vector<int> degrees;
        std::uint64_t prime;
    };
    std::vector<Task> tasks;
    for (const auto& tuple : enumerate_tuples(request.n, 2, request.dmax))
        for (std::uint64_t p : primes_up_to(request.pmax)) tasks.push_back({tuple, p});

    std::vector<CensusRecord> results(tasks.size());
    const int jobs = std::max(1, request.jobs);
    if (jobs == 1 || tasks.size() <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            results[i] = decide_record(tasks[i].degrees,
                                       Characteristic::of(tasks[i].prime), request.property);
        return results;
    }

    // Work stealing over a shared counter; results land at their task index,
    // so emission order never depends on scheduling.
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    const int nw = std::min<int>(jobs, static_cast<int>(tasks.size()));
    workers.reserve(static_cast<std::size_t>(nw));
    for (int w = 0; w < nw; ++w) {
        workers.emplace_back([&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                results[i] = decide_record(tasks[i].degrees,
                                           Characteristic::of(tasks[i].prime),
                                           request.property);
            }
        });
    }
    for (auto& w : workers) w.join();
    return results;
}

}  // namespace lefschetz
