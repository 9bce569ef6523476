#pragma once

#include <algorithm>
#include <exception>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <omp.h>

#include "rf/errors.hpp"
#include "rf/theorems.hpp"

namespace rf::detail {

// One check of the suite. The name and anchor are known before it runs so a
// filter can skip it and a library error can still be reported under its name.
struct NamedTask {
  std::string name;
  std::string anchor;
  double tol = 0.0;
  std::function<CheckReport()> run;
};

inline CheckReport run_one(const NamedTask& t) {
  try {
    return t.run();
  } catch (const Error& e) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return make_report(t.name, nan, nan, t.tol, t.anchor + " [" + e.what() + "]");
  }
}

// Runs the tasks on an OpenMP team; output is sorted by name, so it does not
// depend on the schedule.
inline std::vector<CheckReport> run_tasks(const std::vector<NamedTask>& tasks, int jobs) {
  const int n = static_cast<int>(tasks.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  std::vector<CheckReport> out(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int i = 0; i < n; ++i) {
    try {
      out[i] = run_one(tasks[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::stable_sort(out.begin(), out.end(),
                   [](const CheckReport& x, const CheckReport& y) { return x.name < y.name; });
  return out;
}

std::vector<NamedTask> catalog_tasks(double tol, const SuiteOptions& opts);

}  // namespace rf::detail
