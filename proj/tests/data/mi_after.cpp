class A {
 public:
  int x = 0;
  int first() {
    return 1;
  }
};

class B {
 public:
  int y = 0;
  int second() {
    return 2;
  }
};

class D : public A, public B {
 public:
  int sum() {
    return x + y;
  }
};
