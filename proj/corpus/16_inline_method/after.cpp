class Account {
  double balance = 0;
  int history = 0;
  double last = 0;
 public:
  void deposit(double amount) {
    balance = balance + amount;
    history = history + 1;
    last = amount;
  }
};
