// Copyright 2026 The qapt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>

#include "qapt/harness.hpp"
#include "qapt/io.hpp"

namespace qapt {

namespace {

constexpr double kW = 480, kH = 360, kPad = 50;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string frame(const std::string& title, const std::string& xlabel, const std::string& ylabel,
                  double xmin, double xmax, double ymin, double ymax) {
  std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kW) + "\" height=\"" +
                  num(kH) + "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += "<text x=\"" + num(kW / 2) + "\" y=\"20\" text-anchor=\"middle\" font-size=\"13\">" + title + "</text>\n";
  s += "<line x1=\"" + num(kPad) + "\" y1=\"" + num(kH - kPad) + "\" x2=\"" + num(kW - kPad) + "\" y2=\"" +
       num(kH - kPad) + "\" stroke=\"black\"/>\n";
  s += "<line x1=\"" + num(kPad) + "\" y1=\"" + num(kPad) + "\" x2=\"" + num(kPad) + "\" y2=\"" +
       num(kH - kPad) + "\" stroke=\"black\"/>\n";
  s += "<text x=\"" + num(kW / 2) + "\" y=\"" + num(kH - 12) + "\" text-anchor=\"middle\">" + xlabel + "</text>\n";
  s += "<text x=\"14\" y=\"" + num(kH / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 14 " +
       num(kH / 2) + ")\">" + ylabel + "</text>\n";
  s += "<text x=\"" + num(kPad) + "\" y=\"" + num(kH - kPad + 14) + "\" text-anchor=\"middle\">" + num(xmin) + "</text>\n";
  s += "<text x=\"" + num(kW - kPad) + "\" y=\"" + num(kH - kPad + 14) + "\" text-anchor=\"middle\">" + num(xmax) + "</text>\n";
  s += "<text x=\"" + num(kPad - 4) + "\" y=\"" + num(kH - kPad) + "\" text-anchor=\"end\">" + num(ymin) + "</text>\n";
  s += "<text x=\"" + num(kPad - 4) + "\" y=\"" + num(kPad + 4) + "\" text-anchor=\"end\">" + num(ymax) + "</text>\n";
  return s;
}

double sx(double x, double lo, double hi) { return kPad + (x - lo) / (hi - lo) * (kW - 2 * kPad); }
double sy(double y, double lo, double hi) { return kH - kPad - (y - lo) / (hi - lo) * (kH - 2 * kPad); }

std::string scatter_svg(const std::vector<TrialRecord>& records) {
  double hi = 1e-3;
  for (const TrialRecord& r : records) hi = std::max({hi, r.err, r.opt});
  hi *= 1.05;
  std::string s = frame("err vs opt", "opt", "err", 0.0, hi, 0.0, hi);
  s += "<line x1=\"" + num(sx(0, 0, hi)) + "\" y1=\"" + num(sy(0, 0, hi)) + "\" x2=\"" + num(sx(hi, 0, hi)) +
       "\" y2=\"" + num(sy(hi, 0, hi)) + "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  for (const TrialRecord& r : records) {
    s += "<circle cx=\"" + num(sx(r.opt, 0, hi)) + "\" cy=\"" + num(sy(r.err, 0, hi)) + "\" r=\"3\" fill=\"" +
         (r.guarantee_ok ? "steelblue" : "crimson") + "\" fill-opacity=\"0.7\"/>\n";
  }
  return s + "</svg>\n";
}

std::string histogram_svg(const std::vector<TrialRecord>& records) {
  const int bins = 20;
  double lo = 0.0, hi = 1.0;
  if (!records.empty()) {
    lo = hi = std::log10(std::max<double>(1.0, static_cast<double>(records.front().queries)));
    for (const TrialRecord& r : records) {
      double v = std::log10(std::max<double>(1.0, static_cast<double>(r.queries)));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (hi - lo < 1e-9) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
  std::vector<int> count(bins, 0);
  for (const TrialRecord& r : records) {
    double v = std::log10(std::max<double>(1.0, static_cast<double>(r.queries)));
    int b = std::min(bins - 1, static_cast<int>((v - lo) / (hi - lo) * bins));
    ++count[b];
  }
  const double top = std::max(1, *std::max_element(count.begin(), count.end()));
  std::string s = frame("queries per trial", "log10 queries", "trials", lo, hi, 0.0, top);
  const double bw = (kW - 2 * kPad) / bins;
  for (int b = 0; b < bins; ++b) {
    if (count[b] == 0) continue;
    double y = sy(count[b], 0, top);
    s += "<rect x=\"" + num(kPad + b * bw) + "\" y=\"" + num(y) + "\" width=\"" + num(bw - 1) +
         "\" height=\"" + num(kH - kPad - y) + "\" fill=\"steelblue\"/>\n";
  }
  return s + "</svg>\n";
}

}  // namespace

std::vector<std::string> emit_plots(const std::vector<TrialRecord>& records,
                                    const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  const std::string a = (std::filesystem::path(out_dir) / "err_vs_opt.svg").string();
  const std::string b = (std::filesystem::path(out_dir) / "queries_hist.svg").string();
  write_text_file(a, scatter_svg(records));
  write_text_file(b, histogram_svg(records));
  return {a, b};
}

}  // namespace qapt
