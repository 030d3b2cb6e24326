#pragma once

#include "lapdyn/lapdyn.hpp"

#include <json.hpp>

#include <memory>
#include <ostream>
#include <string>
#include <vector>

namespace lapdyn::cli {

using nlohmann::json;

struct Analysis {
  std::shared_ptr<const AdjacencyBundle> adjacency;
  Connectivity connectivity;
  ReachDecomposition rd;
  LaplacianMatrix laplacian;
  KernelBasis kernels;
  Matrix gamma;
  Spectrum spectrum;
  GersgorinReport gersgorin;
  std::vector<EigenvalueCluster> clusters;
  std::vector<std::string> warnings;
};

Analysis analyze(std::shared_ptr<const AdjacencyBundle> a, LaplacianKind kind);

json to_json(const Analysis& a);
void write_text(std::ostream& os, const Analysis& a);

// Shared JSON helpers; vertex ids are written 1-based.
json vertices_json(const VertexSet& s);
json matrix_json(const Matrix& m);
json vector_json(const Vector& v);
json spectrum_json(const Spectrum& s);

std::string vertices_text(const VertexSet& s);
std::string complex_text(Complex z);

}  // namespace lapdyn::cli
