class Account {
  double balance = 0;
  int history = 0;
  double last = 0;
 public:
  void record(double amount) {
    history = history + 1;
    last = amount;
  }
  void deposit(double amount) {
    balance = balance + amount;
    record(amount);
  }
};
