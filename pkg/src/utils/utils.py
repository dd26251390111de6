# _author: Coke
# _date: 2024/9/2 11:20
# _description: 工具集合

import os
import sys


def read_text(filepath: str) -> str:
    """
    读取文本内容, 路径为 "-" 时读取标准输入

    :param filepath: 文件路径
    :return: 文本内容
    """
    if filepath == "-":
        return sys.stdin.read()

    with open(filepath, "r", encoding="utf-8") as file:
        return file.read()


def write_bytes(filepath: str, data: bytes) -> None:
    """
    写入字节内容, 路径为 "-" 时写入标准输出

    :param filepath: 文件路径
    :param data: 要写入的内容
    :return:
    """
    if filepath == "-":
        sys.stdout.buffer.write(data + b"\n")
        sys.stdout.flush()
        return

    with open(filepath, "wb") as file:
        file.write(data + b"\n")


def join_path(*args: str) -> str:
    """
    获取项目基础绝对路径, 从项目根目录(src)出发

    :param args: 要拼接的目录名称
    :return: 拼接后的绝对路径
    """
    return os.path.abspath(os.path.join(os.path.dirname(os.path.dirname(__file__)), *args))


def create_dir(dir_path: str) -> str:
    """
    创建指定目录

    :param dir_path: 目录地址
    :return: 创建的目录路径
    """
    if not os.path.exists(dir_path):
        os.makedirs(dir_path)
    return dir_path
