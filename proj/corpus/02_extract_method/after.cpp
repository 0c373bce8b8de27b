class Invoice {
 public:
  double total(double net, double rate) {
    double tax = computeTax(net, rate);
    double gross = net + tax;
    return gross;
  }
  double computeTax(double net, double rate) {
    double tax = net * rate;
    tax = tax + 0.5;
    return tax;
  }
};
