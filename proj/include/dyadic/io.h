#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dyadic/pose.h"
#include "dyadic/scene.h"

namespace dyadic {

// Line-delimited JSON, one {"u":[a,b,c],"v":[d,e,f]} object per line, plain
// integers before any reduction. Blank lines are skipped. Integers may be
// JSON numbers or decimal strings. Throws Error(kMalformedInput).
std::vector<PointPair> ReadPointPairs(std::istream& in);
void WritePointPairs(std::ostream& out, const std::vector<PointPair>& pairs);

// Ground truth: quaternion, translation, essential numerator/denominator,
// camera matrices and the 3D points.
void WriteGroundTruth(std::ostream& out, const Scene& scene);
Mat3 ReadGroundTruthEssential(std::istream& in);

// One candidate per line. Residues are decimal strings mod 2^N, plus the
// digit-string form of every entry. Lines starting with '#' are comments.
std::string CandidateToJson(const EssentialCandidate& candidate);
EssentialCandidate CandidateFromJson(const std::string& line);
std::vector<EssentialCandidate> ReadCandidates(std::istream& in);

}  // namespace dyadic
