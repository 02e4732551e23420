#include <gtest/gtest.h>

#include <sstream>

#include "cnls/ensemble.hpp"
#include "cnls/errors.hpp"
#include "cnls/integrator.hpp"
#include "cnls/trajectory_io.hpp"

using namespace cnls;

namespace {

Trajectory sample_trajectory() {
  SolverConfig c;
  c.equation = Equation::LimitPDE;
  c.grid = GridSpec(16);
  c.gamma = -1.0;
  c.alpha_sq = 7.25;
  c.dt = 1e-2;
  c.t_end = 0.1;
  c.record_every = 5;
  return solve(random_sparse_field(c.grid, 3, 3, 0.7, 17), c);
}

}  // namespace

TEST(TrajectoryIo, RoundTripIsLossless) {
  const Trajectory t = sample_trajectory();
  std::stringstream buffer;
  write_trajectory(buffer, t);
  const Trajectory back = read_trajectory(buffer);
  ASSERT_EQ(back.times, t.times);
  ASSERT_EQ(back.states.size(), t.states.size());
  for (std::size_t i = 0; i < t.states.size(); ++i) {
    for (std::size_t j = 0; j < t.states[i].coeffs().size(); ++j) {
      EXPECT_EQ(back.states[i].coeffs()[j], t.states[i].coeffs()[j]);
    }
  }
  EXPECT_EQ(back.config.equation, Equation::LimitPDE);
  EXPECT_EQ(back.config.gamma, -1.0);
  EXPECT_EQ(back.config.alpha_sq, 7.25);
  EXPECT_EQ(back.config.record_every, 5);
  EXPECT_EQ(back.config.grid.size(), 16);
}

TEST(TrajectoryIo, Layout) {
  std::stringstream buffer;
  write_trajectory(buffer, sample_trajectory());
  std::string line;
  std::getline(buffer, line);
  EXPECT_EQ(line, "# cnls-trajectory v1");
  std::getline(buffer, line);
  EXPECT_EQ(line, "# n_modes=16");
  while (std::getline(buffer, line) && line.rfind("#", 0) == 0) {
  }
  EXPECT_EQ(line.rfind("t,re(-8),im(-8),re(-7)", 0), 0u);
}

TEST(TrajectoryIo, RejectsMalformedInput) {
  std::stringstream bad_magic("# something else\n");
  EXPECT_THROW(read_trajectory(bad_magic), FormatError);

  std::stringstream buffer;
  write_trajectory(buffer, sample_trajectory());
  std::string text = buffer.str();
  std::stringstream truncated(text.substr(0, text.size() - 20));
  EXPECT_THROW(read_trajectory(truncated), FormatError);

  const auto pos = text.rfind('\n', text.size() - 2);
  std::string garbled = text.substr(0, pos + 1) + "0.1,abc\n";
  std::stringstream in(garbled);
  EXPECT_THROW(read_trajectory(in), FormatError);
}
