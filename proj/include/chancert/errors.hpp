// Copyright 2026 The chancert authors
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

#ifndef CHANCERT_ERRORS_HPP
#define CHANCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chancert {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

class NotSquareError : public Error {
public:
  using Error::Error;
};

class ShapeMismatchError : public Error {
public:
  using Error::Error;
};

class DimMismatchError : public Error {
public:
  using Error::Error;
};

class NotHermitianError : public Error {
public:
  using Error::Error;
};

class NotPsdError : public Error {
public:
  using Error::Error;
};

class NotCptpError : public Error {
public:
  using Error::Error;
};

class NotChoiError : public Error {
public:
  using Error::Error;
};

class BadRankError : public Error {
public:
  using Error::Error;
};

class BadShapeError : public Error {
public:
  using Error::Error;
};

class NotUnitaryError : public Error {
public:
  using Error::Error;
};

class NonRealObservableError : public Error {
public:
  using Error::Error;
};

class SingularMarginalError : public Error {
public:
  using Error::Error;
};

// Square-root / arccos argument outside its domain by more than the
// numerical clamp window.
class NumericDomainError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

} // namespace chancert

#endif
