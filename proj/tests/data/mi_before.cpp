class A {
 public:
  int first() {
    return 1;
  }
};

class B {
 public:
  int second() {
    return 2;
  }
};

class D : public A, public B {
 public:
  int x = 0;
  int y = 0;
  int sum() {
    return x + y;
  }
};
