// Generated by tests/oracles/tfidf_oracle.py (dense brute force).
#pragma once

#include <string>
#include <vector>

namespace goldnews::testkit {

struct TfIdfCase {
  int max_n;
  std::vector<std::vector<std::string>> corpus;
  std::vector<std::string> query;
  std::vector<std::string> vocabulary;
  std::vector<double> idf;
  std::vector<double> dense;
};

inline const std::vector<TfIdfCase>& tfidf_cases() {
  static const std::vector<TfIdfCase> cases = {
      {1, {{"steady", "futures", "gold"}, {"steady", "steady", "futures", "gold"}, {"steady"}}, {"steady", "steady", "rises", "gold", "steady"}, {"futures", "gold", "steady"}, {1.2876820724517808, 1.2876820724517808, 1.0}, {0.0, 0.3944284584258873, 0.9189266516886851}},
      {2, {{"to", "india"}, {"steady", "india", "steady"}, {"steady", "steady"}, {"to", "to", "steady", "steady", "ounce"}, {"to", "steady", "to"}, {"to"}}, {"ounce", "unseen", "ounce"}, {"india", "india steady", "ounce", "steady", "steady india", "steady ounce", "steady steady", "steady to", "to", "to india", "to steady", "to to"}, {1.8472978603872037, 2.252762968495368, 2.252762968495368, 1.336472236621213, 2.252762968495368, 2.252762968495368, 1.8472978603872037, 2.252762968495368, 1.336472236621213, 2.252762968495368, 1.8472978603872037, 2.252762968495368}, {0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}},
      {1, {{"ounce", "up", "ounce", "up"}, {"rises"}, {"ounce", "rises", "ounce", "up"}, {"india", "to"}, {"rises", "ounce"}, {"india"}}, {"silver", "rises", "up", "silver", "ounce", "silver", "to"}, {"india", "ounce", "rises", "to", "up"}, {1.8472978603872037, 1.5596157879354227, 1.5596157879354227, 2.252762968495368, 1.8472978603872037}, {0.0, 0.42681565799441584, 0.42681565799441584, 0.6165072937461289, 0.5055448001309202}},
      {1, {{"silver", "price"}, {"steady", "silver"}, {"dollar", "silver", "rises", "india", "to"}, {"price", "futures", "rises", "steady"}}, {"dollar", "dollar", "steady", "dollar", "unseen", "india", "steady"}, {"dollar", "futures", "india", "price", "rises", "silver", "steady", "to"}, {1.916290731874155, 1.916290731874155, 1.916290731874155, 1.5108256237659907, 1.5108256237659907, 1.2231435513142097, 1.5108256237659907, 1.916290731874155}, {0.84899111032147, 0.0, 0.2829970367738234, 0.0, 0.0, 0.0, 0.44623622866409285, 0.0}},
      {1, {{"week"}, {"down", "NUM", "futures", "futures"}, {"futures", "NUM"}}, {"week", "unseen", "week", "week", "NUM", "week", "NUM"}, {"NUM", "down", "futures", "week"}, {1.2876820724517808, 1.6931471805599454, 1.2876820724517808, 1.6931471805599454}, {0.35543246785041743, 0.0, 0.0, 0.9347019636214327}},
      {2, {{"ounce", "up", "falls"}, {"up", "falls"}}, {"ounce", "ounce", "up", "ounce", "india"}, {"falls", "ounce", "ounce up", "up", "up falls"}, {1.0, 1.4054651081081644, 1.4054651081081644, 1.0, 1.0}, {0.0, 0.9255449466274399, 0.30851498220914664, 0.21951095080860833, 0.0}},
      {1, {{"dollar"}, {"rises", "silver", "dollar", "silver"}, {"rises"}, {"dollar"}, {"rises", "silver", "silver", "silver"}, {"rises", "silver", "silver"}}, {"rises", "week", "dollar"}, {"dollar", "rises", "silver"}, {1.5596157879354227, 1.336472236621213, 1.5596157879354227}, {0.7593387031634324, 0.6506955769621281, 0.0}},
      {2, {{"down"}, {"price", "to", "futures", "futures"}, {"futures", "week"}, {"price", "india"}}, {"down", "india", "gold"}, {"down", "futures", "futures futures", "futures week", "india", "price", "price india", "price to", "to", "to futures", "week"}, {1.916290731874155, 1.5108256237659907, 1.916290731874155, 1.916290731874155, 1.916290731874155, 1.5108256237659907, 1.916290731874155, 1.916290731874155, 1.916290731874155, 1.916290731874155, 1.916290731874155}, {0.7071067811865476, 0.0, 0.0, 0.0, 0.7071067811865476, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}},
      {1, {{"to", "dollar", "dollar", "to", "to"}, {"dollar", "india"}, {"week", "week", "india"}}, {"dollar", "dollar", "week", "unseen", "to", "india"}, {"dollar", "india", "to", "week"}, {1.2876820724517808, 1.2876820724517808, 1.6931471805599454, 1.6931471805599454}, {0.6877028592349709, 0.34385142961748544, 0.4521233082633858, 0.4521233082633858}},
      {1, {{"to", "ounce", "steady"}}, {"up", "steady", "falls"}, {"ounce", "steady", "to"}, {1.0, 1.0, 1.0}, {0.0, 1.0, 0.0}},
      {1, {{"NUM", "NUM", "week"}, {"week"}, {"falls", "week", "falls", "falls", "NUM", "NUM"}, {"week", "NUM", "week"}}, {"NUM", "falls", "week", "falls"}, {"NUM", "falls", "week"}, {1.2231435513142097, 1.916290731874155, 1.0}, {0.2950568379963234, 0.9245271062761804, 0.24122829873836052}},
      {2, {{"gold"}, {"up", "down", "week", "week"}, {"week", "gold", "silver", "to"}, {"up", "week", "up"}, {"gold", "week"}, {"dollar", "week"}}, {"dollar", "down", "silver"}, {"dollar", "dollar week", "down", "down week", "gold", "gold silver", "gold week", "silver", "silver to", "to", "up", "up down", "up week", "week", "week gold", "week up", "week week"}, {2.252762968495368, 2.252762968495368, 2.252762968495368, 2.252762968495368, 1.5596157879354227, 2.252762968495368, 2.252762968495368, 2.252762968495368, 2.252762968495368, 2.252762968495368, 1.8472978603872037, 2.252762968495368, 2.252762968495368, 1.1541506798272583, 2.252762968495368, 2.252762968495368, 2.252762968495368}, {0.5773502691896257, 0.0, 0.5773502691896257, 0.0, 0.0, 0.0, 0.0, 0.5773502691896257, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}},
      {1, {{"ounce", "falls", "week", "falls", "down"}, {"down"}, {"falls"}}, {"ounce", "down", "ounce", "unseen", "falls"}, {"down", "falls", "ounce", "week"}, {1.2876820724517808, 1.2876820724517808, 1.6931471805599454, 1.6931471805599454}, {0.3349067026613031, 0.3349067026613031, 0.8807241344626972, 0.0}},
      {1, {{"india", "silver", "NUM", "india"}, {"silver", "silver", "silver"}, {"silver", "silver", "NUM"}, {"week", "NUM", "india", "silver", "silver", "week"}, {"NUM", "week", "NUM", "india", "week"}, {"india", "silver", "week", "silver"}}, {"NUM", "unseen", "NUM", "week"}, {"NUM", "india", "silver", "week"}, {1.336472236621213, 1.336472236621213, 1.1541506798272583, 1.5596157879354227}, {0.8637228960409778, 0.0, 0.0, 0.5039670215942568}},
      {1, {{"to", "silver", "rises"}, {"to", "silver", "dollar", "dollar", "silver", "dollar"}, {"to"}}, {"silver"}, {"dollar", "rises", "silver", "to"}, {1.6931471805599454, 1.6931471805599454, 1.2876820724517808, 1.0}, {0.0, 0.0, 1.0, 0.0}},
      {2, {{"NUM"}, {"NUM"}, {"down", "price", "price"}, {"week", "price", "down", "NUM", "down", "week"}}, {"week", "NUM", "unseen", "price", "price", "price"}, {"NUM", "NUM down", "down", "down NUM", "down price", "down week", "price", "price down", "price price", "week", "week price"}, {1.2231435513142097, 1.916290731874155, 1.5108256237659907, 1.916290731874155, 1.916290731874155, 1.916290731874155, 1.5108256237659907, 1.916290731874155, 1.916290731874155, 1.916290731874155, 1.916290731874155}, {0.1924355278358682, 0.0, 0.0, 0.0, 0.0, 0.0, 0.7130884827009405, 0.0, 0.6029748807144795, 0.30148744035723973, 0.0}},
      {1, {{"india", "up", "ounce"}, {"NUM", "rises"}}, {"up", "rises", "india"}, {"NUM", "india", "ounce", "rises", "up"}, {1.4054651081081644, 1.4054651081081644, 1.4054651081081644, 1.4054651081081644, 1.4054651081081644}, {0.0, 0.5773502691896257, 0.0, 0.5773502691896257, 0.5773502691896257}},
      {1, {{"week", "falls", "gold", "falls"}, {"week", "gold", "down", "gold"}, {"to"}, {"down", "futures", "futures", "week", "futures"}, {"up", "futures", "to", "futures", "to"}}, {"gold", "week", "unseen", "down", "week", "up"}, {"down", "falls", "futures", "gold", "to", "up", "week"}, {1.6931471805599454, 2.09861228866811, 1.6931471805599454, 1.6931471805599454, 1.6931471805599454, 2.09861228866811, 1.4054651081081644}, {0.39864701724475515, 0.0, 0.0, 0.39864701724475515, 0.0, 0.49411270256733086, 0.6618260711435657}},
      {1, {{"gold", "gold", "week"}}, {"week", "week", "gold", "unseen"}, {"gold", "week"}, {1.0, 1.0}, {0.4472135954999579, 0.8944271909999159}},
      {2, {{"rises", "rises", "price"}}, {"unseen", "gold", "week", "dollar", "unseen"}, {"price", "rises", "rises price", "rises rises"}, {1.0, 1.0, 1.0, 1.0}, {0.0, 0.0, 0.0, 0.0}},
  };
  return cases;
}

}  // namespace goldnews::testkit
