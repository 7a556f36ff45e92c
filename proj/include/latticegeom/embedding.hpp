#pragma once

// Object embeddings: id -> d-dimensional vector, insertion-ordered.

#include <Eigen/Dense>
#include <string>
#include <unordered_map>
#include <vector>

namespace latticegeom {

class EmbeddingTable {
 public:
  explicit EmbeddingTable(Eigen::Index dim);

  Eigen::Index dim() const { return dim_; }
  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }

  // FormatError on duplicate id, dimension mismatch or non-finite entries.
  void insert(const std::string& id, Eigen::VectorXd v);

  bool contains(const std::string& id) const { return index_.count(id) > 0; }
  const Eigen::VectorXd& at(const std::string& id) const;  // FormatError if unknown
  const Eigen::VectorXd& vector_at(std::size_t i) const { return vectors_.at(i); }

 private:
  Eigen::Index dim_;
  std::vector<std::string> ids_;
  std::vector<Eigen::VectorXd> vectors_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Componentwise mean of a synonym's embedding vectors. EstimationError on an
// empty list, FormatError on mismatched dimensions.
Eigen::VectorXd aggregate_object_embedding(const std::vector<Eigen::VectorXd>& synonym_vectors);

// v -> v - shift for every vector. FormatError on dimension mismatch.
EmbeddingTable apply_shift(const EmbeddingTable& table, const Eigen::VectorXd& shift);

}  // namespace latticegeom
