class Adder {
 public:
  int add(int lhs, int b) {
    int result = lhs + b;
    return result;
  }
};
