# _author: Coke
# _date: 2024/9/3 09:15
# _description: splitmix64 伪随机数生成器, 保证不同实现生成相同的测试语料

MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64 生成器"""

    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next(self) -> int:
        """
        返回下一个 64 位无符号整数

        :return:
        """
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def symmetric(self, bound: int) -> int:
        """
        返回 [-bound, bound] 区间内的整数, 取值为 (next mod (2m+1)) - m

        :param bound: 区间上界 m
        :return:
        """
        return self.next() % (2 * bound + 1) - bound

    def below(self, modulus: int) -> int:
        """
        返回 [0, modulus) 区间内的整数

        :param modulus: 模数
        :return:
        """
        return self.next() % modulus
