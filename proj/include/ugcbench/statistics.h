// include/ugcbench/statistics.h

// Copyright 2026  The ugcbench Authors

// See ../../LICENSE for clarification regarding multiple authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef UGCBENCH_STATISTICS_H_
#define UGCBENCH_STATISTICS_H_

#include <span>
#include <string>
#include <vector>

namespace ugcbench {

struct TTestResult {
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;  // two-sided
};

// Welch's unequal-variance two-sample t-test. The p-value comes from the
// regularized incomplete beta function I_{df/(df+t^2)}(df/2, 1/2).
// Needs >= 2 values per sample and a nonzero variance in at least one.
TTestResult WelchTTest(std::span<const double> a, std::span<const double> b);

// "**" for p < 0.001, "*" for p < 0.05, empty otherwise.
std::string SignificanceStars(double p);

double Mean(std::span<const double> v);
// Unbiased (n - 1) sample variance.
double SampleVariance(std::span<const double> v);

// Linear interpolation between order statistics: position (n - 1) * prob.
// Quantile(v, 0) is the minimum and Quantile(v, 1) the maximum.
double Quantile(std::span<const double> values, double prob);
std::vector<double> Quantiles(std::span<const double> values, std::span<const double> probs);

// 1-based ranks with ties given their average rank.
std::vector<double> AverageRanks(std::span<const double> v);
double Pearson(std::span<const double> x, std::span<const double> y);
// Pearson correlation of the average ranks.
double Spearman(std::span<const double> x, std::span<const double> y);

// Mean over positives of the precision at each positive's rank, ranking by
// descending score with ties kept in input order.
double AveragePrecision(std::span<const double> scores, std::span<const int> labels);

}  // namespace ugcbench

#endif  // UGCBENCH_STATISTICS_H_
